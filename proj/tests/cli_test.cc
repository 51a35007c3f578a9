#include "cspath/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cspath/instance_io.h"

namespace cspath {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cspath");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cspath_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

constexpr char kSingle[] = "cspath v1\nn 2 m 1 M 2\nA 0\nB 1\ne 0 1 3 1\n";
constexpr char kBlocked[] = "cspath v1\nn 2 m 1 M 5\nA 0\nB 1\ne 0 1 3 5\n";

TEST_F(CliTest, SolveReached) {
  const Result r = Cli({"solve", Write("one.txt", kSingle)});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["format"], 1);
  EXPECT_EQ(j["status"], "reached");
  EXPECT_EQ(j["F1"], 3);
  EXPECT_EQ(j["F2"], 1);
  EXPECT_EQ(j["terminal"], 1);
}

TEST_F(CliTest, SolveInfeasible) {
  const Result r = Cli({"solve", Write("blocked.txt", kBlocked), "--mode", "unit"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_EQ(json::parse(r.out)["status"], "infeasible");
}

TEST_F(CliTest, ReconstructAndOracle) {
  const std::string file = Write("one.txt", kSingle);
  const Result rec = Cli({"reconstruct", file});
  EXPECT_EQ(rec.code, kExitOk);
  EXPECT_EQ(json::parse(rec.out)["vertices"], json::array({0, 1}));
  const Result orc = Cli({"oracle", file});
  EXPECT_EQ(orc.code, kExitOk);
  const json j = json::parse(orc.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_EQ(j["F1"], 3);

  const std::string blocked = Write("blocked.txt", kBlocked);
  const Result none = Cli({"reconstruct", blocked});
  EXPECT_EQ(none.code, kExitInfeasible);
  EXPECT_TRUE(json::parse(none.out)["vertices"].is_null());
  EXPECT_EQ(Cli({"oracle", blocked}).code, kExitInfeasible);
}

TEST_F(CliTest, VerifySuite) {
  const Result r = Cli({"verify", "--grids", "200", "--seed", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["checked"], 200);
  EXPECT_EQ(j["mismatches"], 0);
}

TEST_F(CliTest, VerifyNeedsInput) { EXPECT_EQ(Cli({"verify"}).code, kExitUsage); }

TEST_F(CliTest, GenThenSolve) {
  const std::string file = Path("grid.txt");
  const Result g = Cli({"gen", "grid", "--dims", "7,7", "--f1", "uniform:1:5", "--f2", "const:1",
                        "--budget", "inf", "--seed", "4", "-o", file});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  const ProblemInstance inst = ReadInstanceFile(file);
  EXPECT_EQ(inst.graph.num_vertices(), 49);
  const Result s = Cli({"solve", file});
  EXPECT_EQ(s.code, kExitOk);
  const Result o = Cli({"oracle", file});
  EXPECT_EQ(json::parse(s.out)["F1"], json::parse(o.out)["F1"]);
}

TEST_F(CliTest, GenOtherFamilies) {
  EXPECT_EQ(Cli({"gen", "speedway", "--n", "6", "-o", Path("sw.txt")}).code, kExitOk);
  EXPECT_EQ(ReadInstanceFile(Path("sw.txt")).graph.num_vertices(), 13 * 7);
  EXPECT_EQ(Cli({"gen", "fractal", "--k", "3", "--levels", "-o", Path("fr.txt")}).code, kExitOk);
  for (int j = 1; j <= 3; ++j) {
    EXPECT_TRUE(fs::exists(Path("fr.level" + std::to_string(j) + ".txt"))) << j;
  }
  EXPECT_EQ(Cli({"gen", "random", "--n", "30", "--budget", "12", "--seed", "2", "-o",
                 Path("r.txt")})
                .code,
            kExitOk);
  EXPECT_EQ(ReadInstanceFile(Path("r.txt")).budget, 12);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve"}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", Write("one.txt", kSingle), "--mode", "warp"}).code, kExitUsage);
  const Result missing = Cli({"solve", Path("nope.txt")});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
  EXPECT_EQ(Cli({"gen", "grid", "--dims", "4,4", "-o", Path("g.txt")}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, WorkersDoNotChangeOutput) {
  const std::string file = Path("big.txt");
  ASSERT_EQ(Cli({"gen", "grid", "--dims", "41,41", "--f1", "bernoulli:0.5", "--f2", "uniform:1:3",
                 "--budget", "60", "-o", file})
                .code,
            kExitOk);
  const Result one = Cli({"trace", file});
  const Result many = Cli({"trace", file, "--workers", "8"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(Cli({"solve", file}).out, Cli({"solve", file, "--workers", "8"}).out);
}

TEST_F(CliTest, TraceWithPlane) {
  const std::string file = Path("sw.txt");
  ASSERT_EQ(Cli({"gen", "speedway", "--n", "8", "-o", file}).code, kExitOk);
  const Result r = Cli({"trace", file, "--plane", "8", "--mode", "unit"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("# format 1\nt,delta,active_vertices,active_edges,phantoms,triggered,N_t\n",
                        0),
            0u);
}

TEST_F(CliTest, BenchFractalCsv) {
  const Result r = Cli({"bench", "--fractal", "2,3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("# format 1\nk,t,level,", 0), 0u);
}

}  // namespace
}  // namespace cspath
