#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

#include "rbw/cli.hpp"
#include "rbw/io.hpp"

using namespace rbw;

namespace {

const std::string kData = RBW_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run rbw_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

}  // namespace

TEST_CASE("boost prints the reference event") {
  const auto r = rbw_cli({"boost", "--v", "0.6c", "--t", "0", "--x", "1000"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "T=-0.0025 s, X=1250 km\n");
  const auto fast = rbw_cli({"boost", "--v", "1.5c", "--t", "0", "--x", "1"});
  CHECK(fast.code == cli::kValidationError);
  CHECK(fast.err.find("SuperluminalVelocity") != std::string::npos);
}

TEST_CASE("sweep CSV") {
  const auto r = rbw_cli({"sweep", "--k0", "6.2832", "--a-min", "0", "--a-max", "1", "--steps", "100"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find('\r') == std::string::npos);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 102);
  CHECK(ls[0] == "a,p_D1,p_D2,ReT,ImT");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto row = csv_row(ls[i]);
    REQUIRE(row.size() == 5);
    CHECK(row[1] == doctest::Approx(std::pow(std::cos(6.2832 * row[0]), 2)).epsilon(1e-10));
  }
  // Serial and parallel loops print identical bytes.
  CHECK(rbw_cli({"sweep", "--k0", "6.2832", "--steps", "100", "--serial"}).out ==
        rbw_cli({"sweep", "--k0", "6.2832", "--steps", "100"}).out);
}

TEST_CASE("contract ends with the CCR verdict") {
  const auto r = rbw_cli({"contract", "--hbar", "1", "--m", "1"});
  CHECK(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE_FALSE(ls.empty());
  CHECK(ls.back() == "[P_i,Q_n] = -i δ_in I : CCR RECOVERED");
  CHECK(r.out.find("poincare: 0 (exact)") != std::string::npos);
  const auto h = rbw_cli({"contract", "--hbar", "1/2", "--m", "3"});
  CHECK(lines(h.out).back() == "[P_i,Q_n] = -i*1/2 δ_in I : CCR RECOVERED");
}

TEST_CASE("group-check exit codes") {
  CHECK(rbw_cli({"group-check", kData + "/groups/s3.json"}).code == cli::kOk);
  CHECK(rbw_cli({"group-check", kData + "/groups/s3_corrupted.json"}).code == cli::kValidationError);
  const auto bad = rbw_cli({"group-check", kData + "/groups/s3_bad_irrep.json", "--format", "json"});
  CHECK(bad.code == cli::kContractViolation);
  const auto j = io::json::parse(bad.out);
  CHECK(j["irreps"]["standard"]["ok"] == false);
  CHECK(j["irreps"]["sign"]["ok"] == true);
}

TEST_CASE("reconstruct") {
  const auto r = rbw_cli({"reconstruct", "--group", kData + "/groups/s3.json", "--expectations",
                          kData + "/expectations/s3_standard_mixed.json", "--symmetry", "213"});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(0.8));
  CHECK(j["eigenvalues"][1].get<double>() == doctest::Approx(0.2));
  double total = 0.0;
  for (const auto& o : j["outcomes"]["distribution"]) total += o["probability"].get<double>();
  CHECK(total == doctest::Approx(1.0));

  const auto bad = rbw_cli({"reconstruct", "--group", kData + "/groups/z2.json", "--expectations",
                            kData + "/expectations/z2_sign_inconsistent.json"});
  CHECK(bad.code == cli::kContractViolation);
  CHECK(bad.err.find("InconsistentExpectations") != std::string::npos);
}

TEST_CASE("mzi subcommand") {
  const auto r = rbw_cli({"mzi", "--config", kData + "/pipelines/balanced.json", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::json::parse(r.out);
  CHECK(j["p_D1"].get<double>() == doctest::Approx(1.0));
  const auto s = rbw_cli({"mzi", "--k0", "6.283185307179586", "--elements", "source,bs,detector", "--samples", "1000",
                          "--seed", "3", "--format", "json"});
  REQUIRE(s.code == cli::kOk);
  CHECK(s.out == rbw_cli({"mzi", "--k0", "6.283185307179586", "--elements", "source,bs,detector", "--samples", "1000",
                          "--seed", "3", "--format", "json"})
                     .out);
  CHECK(rbw_cli({"mzi", "--k0", "1", "--elements", "source,mirrors,detector"}).code == cli::kValidationError);
}

TEST_CASE("scenario and selftest") {
  const auto sc = rbw_cli({"scenario"});
  CHECK(sc.code == cli::kOk);
  CHECK(sc.out.find("360 km") != std::string::npos);
  const auto st = rbw_cli({"selftest"});
  CHECK(st.code == cli::kOk);
  CHECK(st.out.find("FAIL") == std::string::npos);
  const auto ls = rbw_cli({"selftest", "--list"});
  CHECK(ls.code == cli::kOk);
  CHECK(lines(ls.out).size() == lines(st.out).size() - 1);
  const auto corrupt = rbw_cli({"selftest", "--fixture", kData + "/groups/s3_corrupted.json"});
  CHECK(corrupt.code == cli::kContractViolation);
  CHECK(corrupt.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(rbw_cli({}).code == cli::kValidationError);
  CHECK(rbw_cli({"frobnicate"}).code == cli::kValidationError);
  const auto r = rbw_cli({"sweep", "--steps", "10"});
  CHECK(r.code == cli::kValidationError);
  CHECK(r.err.find("--k0") != std::string::npos);
  CHECK(rbw_cli({"group-check", "/nonexistent.json"}).code == cli::kValidationError);
  CHECK(rbw_cli({"--help"}).code == cli::kOk);
}

TEST_CASE("output file and precision") {
  const auto path = std::filesystem::temp_directory_path() / "rbw_cli_test_boost.txt";
  const auto r = rbw_cli({"boost", "--v", "0.6c", "--t", "0.002", "--x", "1000", "--precision", "3", "-o", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  CHECK(text.find("X=800 km") != std::string::npos);
  std::filesystem::remove(path);
}

#ifdef RBW_CLI_PATH
TEST_CASE("installed binary propagates exit codes") {
  const std::string cmd = std::string(RBW_CLI_PATH) + " group-check " + kData + "/groups/s3_bad_irrep.json > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == cli::kContractViolation);
}
#endif
