#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <ordlines/ordlines.hpp>

#include "cli/commands.hpp"

namespace ordlines::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ordlines_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenThenStatsJson) {
  ASSERT_EQ(run_cli({"gen", "--construction", "skew", "--m", "10", "-o", path("skew.txt")}).code, kExitOk);
  CliRun r = run_cli({"stats", path("skew.txt"), "--json", "--planes"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["span"]["ordinary"], 100);
  EXPECT_EQ(j["planes"]["max_coplanar"], 11);
}

TEST_F(CliTest, ConstantsText) {
  CliRun r = run_cli({"constants", "--alpha", "1/2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("c_alpha0 = 1/118098"), std::string::npos);
  EXPECT_NE(r.out.find("alpha0 = 2/27"), std::string::npos);
  EXPECT_NE(r.out.find("mu = 71/144"), std::string::npos);
}

TEST_F(CliTest, ConstantsGrid) {
  CliRun r = run_cli({"constants", "--grid", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["grid"].size(), 99u);
  EXPECT_TRUE(j["all_hold"].get<bool>());
}

TEST_F(CliTest, VerifyExitCodes) {
  ASSERT_EQ(run_cli({"gen", "--construction", "hesse", "-o", path("hesse.txt")}).code, kExitOk);
  CliRun hesse = run_cli({"verify", "sylvester-gallai", path("hesse.txt")});
  // Over Q(w) the theorem does not apply, so a failure is informative only.
  EXPECT_EQ(hesse.code, kExitOk);
  EXPECT_NE(hesse.out.find("fails"), std::string::npos);

  ASSERT_EQ(run_cli({"gen", "--construction", "skew", "--m", "5", "-o", path("skew.txt")}).code, kExitOk);
  CliRun skew = run_cli({"verify", "skew-bound", path("skew.txt"), "--line1", "0,1", "--line2", "5,6", "--json"});
  ASSERT_EQ(skew.code, kExitOk) << skew.err;
  auto j = nlohmann::json::parse(skew.out);
  EXPECT_EQ(j["result"]["lhs"], 25);
  EXPECT_EQ(j["result"]["rhs"], 15);
  CliRun automatic = run_cli({"verify", "skew-bound", path("skew.txt")});
  EXPECT_EQ(automatic.code, kExitOk);
  EXPECT_NE(automatic.out.find("= 15"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--construction", "nope"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"stats", path("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"boroczky", "--m", "7"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"constants", "--alpha", "3/2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ParseErrorNamesLine) {
  {
    std::ofstream f(path("bad.txt"));
    f << "dim=2 kind=affine field=Q\n1 2\n3 4 5\n";
  }
  CliRun r = run_cli({"stats", path("bad.txt")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_NE(r.err.find("wrong-coordinate-count"), std::string::npos);
}

TEST_F(CliTest, SearchWritesSetAndTrace) {
  ASSERT_EQ(run_cli({"gen", "--construction", "skew", "--m", "5", "-o", path("init.txt")}).code, kExitOk);
  CliRun r = run_cli({"search", "--alpha", "3/5", "--iters", "200", "--seed", "3", "--init", path("init.txt"), "-o",
                   path("best.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream trace_file(path("best.txt") + ".json");
  auto trace = nlohmann::json::parse(trace_file);
  EXPECT_EQ(trace["params"]["seed"], 3);
  EXPECT_EQ(trace["params"]["iterations"], 200);
  EXPECT_LE(trace["result"]["best_count"].get<int>(), 25);
  PointSet best = read_pointset_file(path("best.txt"));
  EXPECT_EQ(span_summary(best).ordinary, trace["result"]["best_count"].get<std::size_t>());
}

TEST_F(CliTest, BoroczkyAndProject) {
  CliRun b = run_cli({"boroczky", "--m", "10", "--json"});
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(b.out)["ordinary"], 10);
  ASSERT_EQ(run_cli({"gen", "--construction", "skew", "--m", "4", "-o", path("s.txt")}).code, kExitOk);
  CliRun p = run_cli({"project", path("s.txt"), "--center", "0", "--trace", "--json"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["trace"]["q1_size"], 5);
  EXPECT_EQ(j["trace"]["q2_size"], 4);
}

}  // namespace
}  // namespace ordlines::cli
