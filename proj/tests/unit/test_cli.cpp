#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include "support/fixtures.hpp"

#ifdef ISM_CLI_PATH

using ism::support::temp_dir;

namespace {
int run_cli(const std::string& args) {
  const std::string cmd = std::string(ISM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write(const std::string& dir, const std::string& text) {
  const auto path = dir + "/c.ini";
  std::ofstream(path) << text;
  return path;
}
}  // namespace

TEST(Cli, RunAndVerifySucceed) {
  const auto dir = temp_dir("cli_ok");
  const auto cfg = write(dir,
                         "model = deterministic\n[params]\nN = 6\nJ = 1\n[integration]\ndt = 0.01\nt_end = 0.5\n"
                         "stride = 10\nseed = 1\n");
  EXPECT_EQ(run_cli("run " + cfg + " --output " + dir + "/out"), 0);
  EXPECT_EQ(run_cli("verify " + dir + "/out/summary.json"), 0);
}

TEST(Cli, ConfigErrorExitsWithTwo) {
  const auto dir = temp_dir("cli_bad");
  const auto cfg = write(dir, "model = deterministic\n[params]\nN = 4\n[kernel]\ntype = distance\nq = 1.5\n");
  EXPECT_EQ(run_cli("run " + cfg), 2);
}

TEST(Cli, OversizedFieldStepIsCapped) {
  const auto dir = temp_dir("cli_cfl");
  const auto cfg = write(dir,
                         "model = monokinetic_1d\n[continuum]\ncells = 64\n[integration]\ndt = 1\nt_end = 0.1\n"
                         "cfl = 1\n");
  EXPECT_EQ(run_cli("run " + cfg + " --output " + dir + "/out"), 0);
}

TEST(Cli, MissingFileExitsWithOne) { EXPECT_EQ(run_cli("run /nonexistent/c.ini"), 1); }

TEST(Cli, UsageErrorExitsWithOne) { EXPECT_EQ(run_cli("frobnicate"), 1); }

TEST(Cli, ExpansionCheck) {
  EXPECT_EQ(run_cli("check-expansion --kind space --eps-list 0.2,0.1,0.05,0.025"), 0);
}

TEST(Cli, ScanBifurcation) {
  const auto dir = temp_dir("cli_scan");
  EXPECT_EQ(run_cli("scan-bifurcation --min 1 --max 6 --steps 20 --output " + dir), 0);
  EXPECT_TRUE(std::ifstream(dir + "/bifurcation.csv").good());
}

TEST(Cli, VerifyFailureExitsWithThree) {
  const auto dir = temp_dir("cli_tamper");
  const auto cfg = write(dir,
                         "model = deterministic\n[params]\nN = 3\nJ = 1\n[integration]\ndt = 0.01\nt_end = 0.1\n"
                         "stride = 5\nseed = 2\n");
  ASSERT_EQ(run_cli("run " + cfg + " --output " + dir + "/out"), 0);
  // Overwrite v3 of the last row: the speed check must fail.
  std::string text;
  {
    std::ifstream in(dir + "/out/snapshots.csv");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto pos = text.size() - 1;
  for (int k = 0; k < 4; ++k) pos = text.rfind(',', pos - 1);  // start of v3 on the last row
  text.replace(pos + 1, text.find(',', pos + 1) - pos - 1, "5");
  std::ofstream(dir + "/out/snapshots.csv") << text;
  EXPECT_EQ(run_cli("verify " + dir + "/out/summary.json"), 3);
}

#endif  // ISM_CLI_PATH
