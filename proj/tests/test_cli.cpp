#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dsq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dsq::app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return {};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("dsq_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, XiSqueezedExample) {
  const auto r = run({"xi", "--n", "2", "--k", "1", "--a", "0.6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(value_of(r.out, "xi")), 0.7276, 1e-3);
  EXPECT_EQ(value_of(r.out, "verdict"), "squeezed");
}

TEST(Cli, XiNullMeanSpin) {
  const auto r = run({"xi", "--n", "6", "--k", "3", "--a", "0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("mean spin is a null vector"), std::string::npos);
  EXPECT_EQ(value_of(r.out, "verdict"), "undefined_mean_spin");
}

TEST(Cli, XiValidationAndUsageErrors) {
  const auto k = run({"xi", "--n", "5", "--k", "5", "--a", "0.3"});
  EXPECT_EQ(k.code, 2);
  EXPECT_NE(k.err.find("k_out_of_range"), std::string::npos);
  EXPECT_EQ(run({"xi", "--n", "4", "--k", "2", "--a", "1.0"}).code, 2);
  EXPECT_EQ(run({"xi", "--n", "five", "--k", "2", "--a", "0.1"}).code, 1);
  EXPECT_EQ(run({"xi", "--n", "5", "--k", "2"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"xi", "--bogus", "1"}).code, 1);
}

TEST(Cli, XiBothMethodsAgree) {
  const auto r = run({"xi", "--n", "7", "--k", "3", "--a", "0.45", "--method", "both"});
  ASSERT_EQ(r.code, 0);
  std::vector<double> xis;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("xi = ", 0) == 0) xis.push_back(std::stod(line.substr(5)));
  }
  ASSERT_EQ(xis.size(), 3u);
  EXPECT_NEAR(xis[0], xis[1], 1e-10);
  EXPECT_NEAR(xis[0], xis[2], 1e-6);
}

TEST(Cli, ConfigFileMergesWithFlagsWinning) {
  const auto dir = scratch_dir();
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "n = 2\nk = 1\na = 0.1\n";
  const auto r = run({"xi", "--config", cfg.string(), "--a", "0.6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::stod(value_of(r.out, "a")), 0.6);
  EXPECT_EQ(value_of(r.out, "N"), "2");
  EXPECT_EQ(run({"xi", "--config", (dir / "missing.cfg").string()}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, SweepWritesCsv) {
  const auto dir = scratch_dir();
  const auto out = dir / "sweep.csv";
  const auto r = run({"sweep", "--n", "8", "--k-list", "1,2,3,4", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 801);
  EXPECT_EQ(csv.rfind("N,k,a,sx,sz,perp_var,xi,method,verdict\n", 0), 0u);

  const auto again = run({"sweep", "--n", "8", "--k-list", "1,2,3,4", "--out", "-"});
  EXPECT_EQ(again.out, csv);

  EXPECT_EQ(run({"sweep", "--n", "8", "--k-list", "1", "--out", (dir / "no/such/dir/x.csv").string()}).code, 1);
  EXPECT_EQ(run({"sweep", "--n", "8", "--k-list", "9", "--out", "-"}).code, 2);
  EXPECT_EQ(run({"sweep", "--n", "8", "--k-list", "1,,2"}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, FigureWritesSvgAndCsv) {
  const auto dir = scratch_dir();
  const auto svg = dir / "fig.svg";
  const auto r = run({"figure", "fig1a", "--out", svg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string first = slurp(svg);
  EXPECT_NE(first.find("</svg>"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "fig.csv"));
  ASSERT_EQ(run({"figure", "fig1a", "--out", svg.string()}).code, 0);
  EXPECT_EQ(slurp(svg), first);
  EXPECT_EQ(run({"figure", "fig7z"}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run({"verify", "--max-n", "5", "--tables-only"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("table_concordance"), std::string::npos);

  const auto bad = run({"verify", "--max-n", "5", "--inject-perturbation", "1e-6"});
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("FAILED suites:"), std::string::npos);
  EXPECT_NE(bad.out.find("oracle_equivalence"), std::string::npos);

  EXPECT_EQ(run({"verify", "--max-n", "40"}).code, 2);
}
