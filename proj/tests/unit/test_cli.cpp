#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sswcn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountAndEnumerate) {
  EXPECT_EQ(run({"count", "3", "2"}).out, "5\n");
  const auto r = run({"enumerate", "3", "2", "--bound", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e1,e2,e3,e1,e2,e3\n");
  const auto csv = run({"--format", "csv", "enumerate", "2", "2"});
  EXPECT_EQ(csv.out, "index,steps,height\n0,\"e1,e1,e2,e2\",2\n1,\"e1,e2,e1,e2\",1\n");
  const auto json = nlohmann::json::parse(run({"enumerate", "4", "1", "--format", "json"}).out);
  EXPECT_EQ(json[0]["height"], 4);
}

TEST(Cli, WeightedCounts) {
  EXPECT_EQ(run({"bounded", "3", "4", "3"}).out, "21\n");
  EXPECT_EQ(run({"bounded", "3", "4", "6", "--mod", "5"}).out, "2\n");
  EXPECT_EQ(run({"bounded", "4", "6", "2", "--b", "3,1,1,2"}).out, "60\n");
  EXPECT_EQ(run({"sswcn", "3", "2", "--symbolic"}).out, sswcn::sswcn_brute(3, 2).to_string() + "\n");
  EXPECT_EQ(run({"sswcn", "3", "3"}).out, "42\n");
  const auto j = nlohmann::json::parse(run({"--format", "json", "bounded", "3", "4", "2"}).out);
  EXPECT_EQ(j["value"], "5");
}

TEST(Cli, Triangles) {
  EXPECT_EQ(run({"triangle", "height", "3", "--rows", "3"}).out, "1: 1\n2: 1 0 4\n3: 1 0 20 0 21\n");
  EXPECT_EQ(run({"triangle", "narayana", "3", "--rows", "2"}).out, "0: 1\n1: 1\n2: 4 1\n");
  const auto csv = run({"--format", "csv", "triangle", "narayana", "4", "--rows", "1", "--first", "1"});
  EXPECT_EQ(csv.out, "k,n,stat,count\n4,1,0,0\n4,1,1,1\n");
  EXPECT_EQ(run({"triangle", "height", "4", "--rows", "2", "--method", "enumeration"}).out, "1: 1\n2: 1 0 1 8 4\n");
  EXPECT_EQ(run({"triangle", "width", "3", "--rows", "2"}).code, 2);
}

TEST(Cli, Period) {
  const auto r = run({"period", "4", "6", "--mod", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scalar period 2"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"--format", "json", "period", "3", "4", "--mod", "5"}).out);
  EXPECT_EQ(j["scalar_period"], 20);
  EXPECT_EQ(run({"period", "3", "4", "--mod", "1"}).code, 2);
  EXPECT_EQ(run({"period", "3", "4", "--mod", "x"}).code, 2);
}

TEST(Cli, Verify) {
  const auto ok = run({"verify", "dprime-3-2n"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "PASS dprime-3-2n (14/14)\n");
  const auto bad = run({"verify", "closed-4-6-5-8"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL stated"), std::string::npos);
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
}

TEST(Cli, OeisCheckOffline) {
  const auto cache = (std::filesystem::temp_directory_path() / "sswcn-cli-empty-cache").string();
  const auto r = run({"oeis-check", "A015448", "bounded:3:4", "--offline", "--terms", "13", "--cache", cache});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "A015448 (fixture): match over 13 terms, indices 0..12\n");
  EXPECT_EQ(run({"oeis-check", "A274969", "dprime32n", "--offline", "--cache", cache}).code, 0);
  EXPECT_EQ(run({"oeis-check", "A001246", "rightmost:4", "--offline", "--cache", cache}).code, 0);
  EXPECT_EQ(run({"oeis-check", "A060854", "catalan-array", "--offline", "--cache", cache}).code, 0);
  EXPECT_EQ(run({"oeis-check", "A001263", "narayana2", "--offline", "--cache", cache}).code, 0);
  const auto miss = run({"oeis-check", "A000108", "bounded:2:1", "--offline", "--cache", cache});
  EXPECT_EQ(miss.code, 1);
  EXPECT_NE(miss.out.find("mismatch at index 2"), std::string::npos);
  EXPECT_EQ(run({"oeis-check", "A999999", "catalan:2", "--offline", "--cache", cache}).code, 2);
}

TEST(Cli, Syt) {
  EXPECT_EQ(run({"syt", "path-to-tableau", "3", "e1,e1,e2,e1,e2,e2,e1,e2,e3,e3,e3,e3"}).out,
            "1 2 4 7\n3 5 6 8\n9 10 11 12\n");
  EXPECT_EQ(run({"syt", "tableau-to-path", "1,2/3,4"}).out, "e1,e1,e2,e2\n");
  EXPECT_EQ(run({"syt", "tally", "1,2,4,7/3,5,6,8/9,10,11,12"}).out, "3\n");
  EXPECT_EQ(run({"syt", "tally", "1,3/2,4", "--format", "csv"}).out, "ascents,descents,tally\n1,2,-1\n");
  EXPECT_EQ(run({"syt", "tally", "2,1"}).code, 2);
}

TEST(Cli, ScanAndTransfer) {
  EXPECT_EQ(run({"scan-pow2", "--k-max", "4", "--u-max", "8", "--n-max", "6"}).out, "2 2\n4 6\n");
  const auto t = run({"transfer", "2", "1"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("state 0: (0,0)"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"--format", "json", "transfer", "3", "5"}).out);
  EXPECT_TRUE(j.contains("entries"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "three", "2"}).code, 2);
  EXPECT_EQ(run({"count", "0", "2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "count", "3", "2"}).code, 2);
  EXPECT_EQ(run({"bounded", "3", "4", "2", "--b", "1,x"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("oeis-check"), std::string::npos);
}
