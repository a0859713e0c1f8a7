#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ofdmclip/experiment.hpp"

using namespace ofdmclip;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const fs::path& stderr_file = "/dev/null") {
  const std::string cmd = std::string(OFDMCLIP_CLI) + " " + args + " >/dev/null 2>" + stderr_file.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ofdmclip_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("make_grid") {
  CHECK(make_grid(0.0, 10.0, 2.0) == std::vector<double>{0, 2, 4, 6, 8, 10});
  CHECK(make_grid(0.0, 1.0, 0.1).size() == 11);
  CHECK(make_grid(5.0, 1.0, 1.0).empty());
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("spec validation") {
  ExperimentSpec spec;
  spec.command = Command::Ser;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // empty SNR grid
  spec.snr_grid = {4.0, 2.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.snr_grid = {2.0, 4.0};
  CHECK_NOTHROW(spec.validate());
  spec.n_symbols = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  ExperimentSpec sweep;
  sweep.command = Command::WindowSweep;
  CHECK_THROWS_AS(sweep.validate(), std::invalid_argument);  // default strategy is cf
  sweep.clip.strategy = ClipStrategy::PeakWindow;
  CHECK_NOTHROW(sweep.validate());
}

TEST_CASE("run_ccdf output") {
  ExperimentSpec spec;
  spec.ofdm = {64, 4, 4};
  spec.n_symbols = 2000;
  spec.clip.iterations = 0;
  const auto out = run_ccdf(spec);
  const auto rows = lines_of(out.csv);
  REQUIRE(rows.size() == 38);
  CHECK(rows[0] == "threshold_db,ccdf");
  double previous = 2.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double p = std::stod(rows[i].substr(rows[i].find(',') + 1));
    CHECK(p <= previous);
    previous = p;
  }
  CHECK(out.summary.find("mean_papr_db=") != std::string::npos);
  CHECK(out.summary.find("ccdf1e-3_papr_db=") != std::string::npos);

  spec.threads = 1;
  const auto serial = run_ccdf(spec);
  spec.threads = 5;
  CHECK(run_ccdf(spec).csv == serial.csv);
}

TEST_CASE("run_ser rows") {
  ExperimentSpec spec;
  spec.command = Command::Ser;
  spec.snr_grid = make_grid(0.0, 4.0, 2.0);
  spec.n_symbols = 100;
  const auto rows = lines_of(run_ser(spec).csv);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "snr_db,symbols,errors,ser");
  CHECK(rows[1].rfind("0.0000,6400,", 0) == 0);
}

TEST_CASE("run_window_sweep has one row per window") {
  ExperimentSpec spec;
  spec.command = Command::WindowSweep;
  spec.clip.strategy = ClipStrategy::PeakWindow;
  spec.n_symbols = 300;
  const auto out = run_window_sweep(spec);
  const auto rows = lines_of(out.csv);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "window,mean_papr_db,ccdf3_papr_db");
  const char* names[] = {"kaiser", "blackman", "hann", "hamming", "flattop"};
  for (int i = 0; i < 5; ++i) CHECK(rows[static_cast<std::size_t>(i) + 1].rfind(std::string(names[i]) + ",", 0) == 0);
  CHECK(run_window_sweep(spec).csv == out.csv);
  CHECK(out.summary.rfind("unclipped", 0) == 0);
}

TEST_CASE("write_output is all-or-nothing") {
  const auto p = scratch("out.csv");
  write_output(p.string(), "a,b\n1,2\n");
  CHECK(slurp(p) == "a,b\n1,2\n");
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));
  CHECK_THROWS_AS(write_output("/nonexistent-dir/x.csv", "x"), IoError);
}

TEST_CASE("cli: ccdf is byte-identical across runs and thread counts") {
  const auto a = scratch("ccdf_a.csv");
  const auto b = scratch("ccdf_b.csv");
  const std::string common = "ccdf --n 64 --mod 4 --oversample 4 --symbols 2000 --seed 1 --clip none";
  REQUIRE(run_cli(common + " --threads 1 --out " + a.string()) == 0);
  REQUIRE(run_cli(common + " --threads 4 --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("threshold_db,ccdf\n", 0) == 0);
}

TEST_CASE("cli: usage errors exit 2 without writing") {
  const auto out = scratch("usage.csv");
  CHECK(run_cli("ser --snr-start 5 --snr-stop 1 --out " + out.string()) == 2);
  CHECK(run_cli("ccdf --window-len 4 --out " + out.string()) == 2);
  CHECK(run_cli("ccdf --n 48 --out " + out.string()) == 2);
  CHECK(run_cli("ccdf --clip rcf --out " + out.string()) == 2);
  CHECK(run_cli("window-sweep --clip cf --out " + out.string()) == 2);
  CHECK(run_cli("bogus") == 2);
  CHECK(run_cli("") == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("cli: unwritable path exits 3 and names the path") {
  const auto err = scratch("stderr.txt");
  CHECK(run_cli("ccdf --symbols 10 --out /nonexistent-dir/ccdf.csv", err) == 3);
  CHECK(slurp(err).find("/nonexistent-dir/ccdf.csv") != std::string::npos);
}

TEST_CASE("cli: environment overrides") {
  const auto a = scratch("env_a.csv");
  const auto b = scratch("env_b.csv");
  REQUIRE(run_cli("ser --symbols 20 --snr-start 3 --snr-stop 3 --out " + a.string()) == 0);
  REQUIRE(std::system(("OFDMCLIP_SYMBOLS=20 OFDMCLIP_SNR_START=3 OFDMCLIP_SNR_STOP=3 " + std::string(OFDMCLIP_CLI) +
                       " ser --out " + b.string() + " >/dev/null 2>&1")
                          .c_str()) == 0);
  CHECK(slurp(a) == slurp(b));
}
