#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "dspc/io.hpp"
#include "dspc/random_instance.hpp"

namespace fs = std::filesystem;
using namespace dspc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "dspc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    setenv("DSPC_LOG", "quiet", 1);
    dir_ = fs::temp_directory_path() /
           ("dspc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kDiamond =
    "p dsp 4 4 2 2 vertex\n"
    "a 1 2 1\na 1 3 1\na 2 4 1\na 3 4 1\n"
    "d 1 4\nd 1 4\n";

}  // namespace

TEST_F(CliTest, SolveThenVerify) {
  write_file(file("in.txt"), kDiamond);
  for (const char* algo : {"dnc", "kernel"}) {
    const Outcome solve = call({"solve", "--algo", algo, "-i", file("in.txt"), "-o", file("sol.txt")});
    EXPECT_EQ(solve.code, 0) << solve.err;
    EXPECT_EQ(call({"verify", "-i", file("in.txt"), "-s", file("sol.txt")}).code, 0);
  }
  const Outcome to_stdout = call({"solve", "-i", file("in.txt")});
  EXPECT_EQ(to_stdout.out.rfind("s 1\n", 0), 0u);
}

TEST_F(CliTest, TamperedSolutionIsRefuted) {
  write_file(file("in.txt"), kDiamond);
  write_file(file("bad.txt"), "s 1\np 1 2 1 2 4\np 2 3 1 2 4\n");
  const Outcome r = call({"verify", "-i", file("in.txt"), "-s", file("bad.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("refuted"), std::string::npos);
  write_file(file("short.txt"), "s 1\np 1 2 1 2 4\n");
  EXPECT_EQ(call({"verify", "-i", file("in.txt"), "-s", file("short.txt")}).code, 1);
  write_file(file("none.txt"), "s 0\n");
  EXPECT_EQ(call({"verify", "-i", file("in.txt"), "-s", file("none.txt")}).code, 1);
}

TEST_F(CliTest, InfeasibleAndModeOverride) {
  write_file(file("in.txt"), "p dsp 4 4 2 1 vertex\na 1 2 1\na 1 3 1\na 2 4 1\na 3 4 1\nd 1 4\nd 1 4\n");
  const Outcome r = call({"solve", "-i", file("in.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "s 0\n");
  EXPECT_EQ(call({"oracle", "-i", file("in.txt")}).code, 1);
  // The two arms are edge-disjoint.
  EXPECT_EQ(call({"solve", "--mode", "edge", "-i", file("in.txt"), "-o", file("sol.txt")}).code, 0);
}

TEST_F(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"solve"}).code, 2);
  EXPECT_EQ(call({"solve", "--algo", "magic", "-i", "x"}).code, 2);
  const Outcome missing = call({"solve", "-i", file("nope.txt")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());
  write_file(file("broken.txt"), "p dsp 2 1 1 1 vertex\na 1 9 1\nd 1 2\n");
  const Outcome broken = call({"solve", "-i", file("broken.txt")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("line 2"), std::string::npos) << broken.err;
  EXPECT_EQ(call({"gen", "lattice"}).code, 2);
  EXPECT_EQ(call({"bench", "--suite", "nothing"}).code, 2);
}

TEST_F(CliTest, OracleTooLargeIsAnInputError) {
  std::string text = "p dsp 16 24 2 2 vertex\n";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int id = 4 * r + c + 1;
      if (c < 3) text += "a " + std::to_string(id) + " " + std::to_string(id + 1) + " 1\n";
      if (r < 3) text += "a " + std::to_string(id) + " " + std::to_string(id + 4) + " 1\n";
    }
  }
  text += "d 1 16\nd 1 16\n";
  write_file(file("grid.txt"), text);
  EXPECT_EQ(call({"oracle", "-i", file("grid.txt"), "--max-combinations", "10"}).code, 2);
  EXPECT_EQ(call({"oracle", "-i", file("grid.txt")}).code, 0);
}

TEST_F(CliTest, GenIsDeterministic) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"gen", "mcc", "--seed", "7"},
           {"gen", "psi", "--seed", "7", "--c", "2", "--class-size", "2"},
           {"gen", "random", "--seed", "7", "--n", "8", "--k", "3", "--mode", "edge"}}) {
    auto a = args, b = args;
    a.insert(a.end(), {"-o", file("a.txt")});
    b.insert(b.end(), {"-o", file("b.txt")});
    ASSERT_EQ(call(a).code, 0);
    ASSERT_EQ(call(b).code, 0);
    const std::string text = read_file(file("a.txt"));
    EXPECT_EQ(text, read_file(file("b.txt")));
    EXPECT_NE(text.find("c seed 7"), std::string::npos);
    EXPECT_NO_THROW(parse_instance(text));
  }
  EXPECT_NE(call({"gen", "mcc", "--seed", "7"}).out, call({"gen", "mcc", "--seed", "8"}).out);
}

TEST_F(CliTest, GeneratedMccWitnessMatchesSolve) {
  for (int seed = 1; seed <= 6; ++seed) {
    const Outcome gen = call({"gen", "mcc", "--seed", std::to_string(seed), "--n", "4", "-o", file("mcc.txt")});
    ASSERT_EQ(gen.code, 0);
    const std::string text = read_file(file("mcc.txt"));
    const bool planted = text.find("c witness none") == std::string::npos;
    const Outcome solve = call({"solve", "-i", file("mcc.txt"), "-o", file("sol.txt")});
    EXPECT_EQ(solve.code, planted ? 0 : 1);
    if (planted) EXPECT_EQ(call({"verify", "-i", file("mcc.txt"), "-s", file("sol.txt")}).code, 0);
  }
}

TEST_F(CliTest, OracleAndSolveAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomDagParams p;
    p.vertex_count = 6;
    p.demand_count = 1 + static_cast<int>(seed % 3);
    p.congestion = 1 + static_cast<int>(seed % 2);
    write_file(file("r.txt"), format_instance(random_instance(p, seed)));
    const int a = call({"solve", "-i", file("r.txt"), "-o", file("s.txt")}).code;
    const int b = call({"oracle", "-i", file("r.txt"), "-o", file("o.txt")}).code;
    ASSERT_EQ(a, b) << "seed " << seed;
    ASSERT_EQ(call({"verify", "-i", file("r.txt"), "-s", file("s.txt")}).code, a);
  }
}

TEST_F(CliTest, BenchSummaryIsDeterministic) {
  const Outcome a = call({"bench", "--suite", "all", "--count", "10", "--seed", "5"});
  const Outcome b = call({"bench", "--suite", "all", "--count", "10", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("suite mcc instances 10 agree 10"), std::string::npos) << a.out;
}
