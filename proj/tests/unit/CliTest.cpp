#include "Driver.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

std::string fixturePath(const std::string &name) {
  return std::string(FIRWINE_FIXTURE_DIR) + "/" + name;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "firwine");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = firwine::runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary so the process exit status itself is checked.
int exitStatus(const std::string &args) {
  std::string cmd = std::string(FIRWINE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("firwine_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST(CliExitCodes, Process) {
  EXPECT_EQ(exitStatus("infer " + fixturePath("CombWhen.fir")), 0);
  EXPECT_EQ(exitStatus("infer " + fixturePath("AddCycle.fir")), 1);
  EXPECT_EQ(exitStatus("infer " + fixturePath("Malformed.fir")), 2);
  EXPECT_EQ(exitStatus("solve " + fixturePath("doubling.txt")), 1);
  EXPECT_EQ(exitStatus("solve " + fixturePath("empty.txt")), 0);
  EXPECT_EQ(exitStatus(""), 2);
  EXPECT_EQ(exitStatus("frobnicate x"), 2);
  EXPECT_EQ(exitStatus("solve /nonexistent/file.txt"), 2);
  EXPECT_EQ(exitStatus("--help"), 0);
}

TEST(Cli, InferCombWhen) {
  auto r = run({"infer", fixturePath("CombWhen.fir")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("wire w : UInt<2>"), std::string::npos);
}

TEST(Cli, InferJson) {
  auto r = run({"infer", "--json", fixturePath("A.fir")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"status\": \"sat\""), std::string::npos);
  EXPECT_NE(r.out.find("\"A.x\": 5"), std::string::npos);
}

TEST(Cli, InferWritesOutputFile) {
  auto dir = scratch("out");
  auto out = dir / "A.fir";
  auto r = run({"infer", fixturePath("A.fir"), "-o", out.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("reg x : UInt<5>, clock"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UnsatDiagnosticNamesLeaves) {
  auto r = run({"infer", fixturePath("AddCycle.fir")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("positive-cycle"), std::string::npos);
  EXPECT_NE(r.err.find("AddCycle.x"), std::string::npos);
  r = run({"infer", "--json", fixturePath("AddCycle.fir")});
  EXPECT_NE(r.out.find("\"scc\": [\n    \"AddCycle.x\"\n  ]"), std::string::npos)
      << r.out;
}

TEST(Cli, StrictEscalatesChecks) {
  auto dir = scratch("strict");
  auto f = dir / "Narrow.fir";
  std::ofstream(f) << "circuit Narrow :\n  module Narrow :\n"
                      "    input a : UInt<4>\n    output b : UInt<2>\n"
                      "    b <= a\n";
  auto r = run({"infer", f.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  r = run({"infer", "--strict", f.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("constant-conflict"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SolveGoldens) {
  auto r = run({"solve", fixturePath("phi3.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "x1 = 0\nx2 = 1\nx3 = 1\nx4 = 1\nx5 = 2\nx6 = 1\nx7 = 1\n");
  r = run({"solve", fixturePath("maxfw.txt")});
  EXPECT_EQ(r.out, "x1 = 2\nx2 = 1\nx3 = 1\n");
  r = run({"solve", fixturePath("empty.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  r = run({"solve", "--json", fixturePath("unique.txt")});
  EXPECT_EQ(r.out, "{\n  \"status\": \"sat\",\n  \"widths\": {\n"
                   "    \"x1\": 0,\n    \"x2\": 1\n  }\n}\n");
}

TEST(Cli, SolveTrace) {
  auto r = run({"solve", "--trace", fixturePath("phi2.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("BaB: eq-sat"), std::string::npos);
}

TEST(Cli, Oracle) {
  auto r = run({"oracle", fixturePath("phi2.txt"), "--bound", "10"});
  EXPECT_EQ(r.code, 0);
  r = run({"oracle", fixturePath("doubling.txt"), "--cutoff", "100"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("diverged"), std::string::npos);
  r = run({"oracle", fixturePath("doubling.txt"), "--cutoff", "0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Parse) {
  auto r = run({"parse", fixturePath("CombWhen.fir")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CombWhen.w >= 2"), std::string::npos);
  r = run({"parse", "--dot", fixturePath("phi2.txt")});
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  EXPECT_NE(r.out.find("l1/w2"), std::string::npos);
}

TEST(Cli, EmitLp) {
  auto dir = scratch("lp");
  auto r = run({"emit-lp", fixturePath("phi2.txt"), "-o", dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "phi2.0.lp"));
  EXPECT_FALSE(std::filesystem::exists(dir / "phi2.1.lp"));
  r = run({"emit-lp", fixturePath("binmin.txt"), "-o", dir.string()});
  EXPECT_TRUE(std::filesystem::exists(dir / "binmin.1.lp"));
  std::filesystem::remove_all(dir);
}
