// ofdmclip: OFDM PAPR-reduction experiments written out as CSV.
//
//   ofdmclip ccdf          PAPR CCDF of clipped (or unclipped) symbols
//   ofdmclip ser           symbol error rate over AWGN on an SNR grid
//   ofdmclip window-sweep  PAPR per peak-window shape on one symbol stream
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 numeric error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "ofdmclip/experiment.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct Flags {
  int n = 64;
  int mod = 8;
  int oversample = 4;
  double cr_db = 3.0;
  int iterations = 5;
  std::string clip;
  std::string window = "hann";
  double kaiser_beta = 5.0;
  int window_len = 11;
  double snr_start = 0.0;
  double snr_stop = 14.0;
  double snr_step = 2.0;
  std::size_t symbols = 10000;
  std::uint64_t seed = 1;
  std::string out = "-";
  unsigned threads = 0;
};

void add_flags(CLI::App& cmd, Flags& f, bool with_snr) {
  auto env = [](CLI::Option* opt, const char* name) { opt->envname(std::string("OFDMCLIP_") + name); };
  env(cmd.add_option("--n", f.n, "Subcarriers N (power of two)")->capture_default_str(), "N");
  env(cmd.add_option("--mod", f.mod, "Constellation order M: 2, 4, 8, 16, 64")->capture_default_str(), "MOD");
  env(cmd.add_option("--oversample", f.oversample, "Oversampling factor L: 1, 2, 4, 8")->capture_default_str(),
      "OVERSAMPLE");
  env(cmd.add_option("--cr-db", f.cr_db, "Clipping threshold over RMS, dB")->capture_default_str(), "CR_DB");
  env(cmd.add_option("--iterations", f.iterations, "Clip/filter iterations K (0 = unclipped)")
          ->capture_default_str(),
      "ITERATIONS");
  env(cmd.add_option("--clip", f.clip, "Strategy: none (clip only), cf (clip+filter), pw (peak window)")
          ->check(CLI::IsMember({"none", "cf", "pw"}))
          ->capture_default_str(),
      "CLIP");
  env(cmd.add_option("--window", f.window, "Peak window: rect|hann|hamming|blackman|kaiser|flattop")
          ->check(CLI::IsMember({"rect", "hann", "hamming", "blackman", "kaiser", "flattop"}))
          ->capture_default_str(),
      "WINDOW");
  env(cmd.add_option("--kaiser-beta", f.kaiser_beta, "Kaiser window beta")->capture_default_str(), "KAISER_BETA");
  env(cmd.add_option("--window-len", f.window_len, "Peak window length (odd)")->capture_default_str(),
      "WINDOW_LEN");
  if (with_snr) {
    env(cmd.add_option("--snr-start", f.snr_start, "First SNR point, dB")->capture_default_str(), "SNR_START");
    env(cmd.add_option("--snr-stop", f.snr_stop, "Last SNR point, dB")->capture_default_str(), "SNR_STOP");
    env(cmd.add_option("--snr-step", f.snr_step, "SNR step, dB")->capture_default_str(), "SNR_STEP");
  }
  env(cmd.add_option("--symbols", f.symbols, "OFDM symbols per run (per SNR point for ser)")
          ->capture_default_str(),
      "SYMBOLS");
  env(cmd.add_option("--seed", f.seed, "RNG seed")->capture_default_str(), "SEED");
  env(cmd.add_option("--out", f.out, "Output CSV path, - for stdout")->capture_default_str(), "OUT");
  env(cmd.add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str(), "THREADS");
}

ofdmclip::ExperimentSpec to_spec(ofdmclip::Command command, const Flags& f) {
  ofdmclip::ExperimentSpec spec;
  spec.command = command;
  spec.ofdm = {f.n, f.oversample, f.mod};
  spec.clip.clip_ratio_db = f.cr_db;
  spec.clip.iterations = f.iterations;
  spec.clip.strategy = ofdmclip::parse_clip_strategy(f.clip);
  spec.clip.window = {ofdmclip::parse_window_type(f.window), f.kaiser_beta};
  spec.clip.window_length = f.window_len;
  if (command == ofdmclip::Command::Ser) spec.snr_grid = ofdmclip::make_grid(f.snr_start, f.snr_stop, f.snr_step);
  spec.n_symbols = f.symbols;
  spec.seed = {f.seed};
  spec.output_path = f.out;
  spec.threads = f.threads;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OFDM clipping-and-filtering PAPR reduction experiments"};
  app.require_subcommand(1);

  Flags ccdf_flags{.clip = "cf"};
  Flags ser_flags{.clip = "cf"};
  Flags sweep_flags{.clip = "pw"};
  auto* ccdf = app.add_subcommand("ccdf", "PAPR CCDF as threshold_db,ccdf");
  auto* ser = app.add_subcommand("ser", "SER over AWGN as snr_db,symbols,errors,ser");
  auto* sweep = app.add_subcommand("window-sweep", "PAPR per window as window,mean_papr_db,ccdf3_papr_db");
  add_flags(*ccdf, ccdf_flags, false);
  add_flags(*ser, ser_flags, true);
  add_flags(*sweep, sweep_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  ofdmclip::ExperimentSpec spec;
  try {
    if (ccdf->parsed()) spec = to_spec(ofdmclip::Command::Ccdf, ccdf_flags);
    if (ser->parsed()) spec = to_spec(ofdmclip::Command::Ser, ser_flags);
    if (sweep->parsed()) spec = to_spec(ofdmclip::Command::WindowSweep, sweep_flags);
    spec.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  ofdmclip::ExperimentOutput result;
  try {
    result = ofdmclip::run(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }

  try {
    ofdmclip::write_output(spec.output_path, result.csv);
  } catch (const ofdmclip::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  (spec.output_path == "-" ? std::cerr : std::cout) << result.summary << "\n";
  return 0;
}
