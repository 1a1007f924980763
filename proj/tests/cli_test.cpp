#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "paley");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = paley::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, Field) {
  const CliRun r = run({"field", "3", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["field"]["modulus"], nlohmann::json({1, 0, 1}));
  EXPECT_EQ(j["field"]["primitive_root"], 4);
}

TEST(Cli, BoundAll) {
  const CliRun r = run({"bound", "3", "3", "13", "--all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["bundle"]["exact"], true);
  EXPECT_EQ(j["bundle"]["omega"], 3);
}

TEST(Cli, BoundSingle) {
  const CliRun r = run({"bound", "3", "4", "20", "--prop41", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["certificate"]["kind"], "exact");

  const CliRun failed = run({"bound", "5", "6", "3", "--prop41", "25"});
  EXPECT_EQ(failed.code, 2);
  EXPECT_EQ(failed.json()["certificate"]["applicable"], false);

  EXPECT_EQ(run({"bound", "3", "4", "10", "--thm13"}).code, 2);
  EXPECT_EQ(run({"bound", "3", "3", "13", "--remark32", "0,1"}).json()["certificate"]["value"], 4);
}

TEST(Cli, Directions) {
  const CliRun r = run({"directions", "3", "2", "--A", "subfield:1", "--B", "subfield:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["bound"], 4);
  EXPECT_EQ(j["sharp"], true);
  EXPECT_EQ(j["directions"]["infinity"], true);

  const CliRun range = run({"directions", "3", "3", "--A", "range:3", "--B", "0,5"});
  ASSERT_EQ(range.code, 0) << range.err;
  EXPECT_EQ(range.json()["A"], nlohmann::json({0, 1, 2}));

  EXPECT_EQ(run({"directions", "3", "2", "--A", "0,x", "--B", "1,2"}).code, 2);
  EXPECT_EQ(run({"directions", "3", "2", "--A", "0,9", "--B", "1,2"}).code, 2);
}

TEST(Cli, Clique) {
  const CliRun r = run({"clique", "3", "4", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["clique"]["size"], 9);

  const CliRun e = run({"clique", "7", "3", "19", "--enumerate", "--contains", "0,1"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.json()["enumeration"]["cliques"], nlohmann::json({{0, 1, 2, 3, 4, 5, 6}}));

  const CliRun cyc = run({"clique", "3", "3", "13", "--index-set", "0,1"});
  ASSERT_EQ(cyc.code, 0) << cyc.err;
  EXPECT_EQ(cyc.json()["graph"]["I"], nlohmann::json({0, 1}));
}

TEST(Cli, Timeout) {
  const CliRun r = run({"--time-limit", "0.000001", "clique", "3", "6", "2"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.json()["clique"]["optimal"], false);
}

TEST(Cli, Family) {
  const CliRun a = run({"family", "ex42", "7", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.json()["instance"]["certificate"]["value"], 7);
  EXPECT_EQ(run({"family", "ex44", "1"}).code, 2);
  EXPECT_EQ(run({"family", "ex42", "5", "1"}).code, 2);
  EXPECT_EQ(run({"family", "ex42", "7"}).code, 2);
  EXPECT_EQ(run({"family", "ex47"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"field", "4", "1"}).code, 2);
  EXPECT_EQ(run({"graph", "13", "1", "4"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "field", "3", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
}

TEST(Cli, Formats) {
  const CliRun csv = run({"--format", "csv", "bound", "3", "3", "13"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("bound,q,p,e,d,K,I,value,kind,applicable,witness,reason\n", 0), 0u);
  EXPECT_NE(csv.out.find("\nthm13,27,3,3,13,,,3,upper,true,"), std::string::npos);

  const CliRun text = run({"field", "3", "2", "--format", "text"});
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("field.primitive_root: 4\n"), std::string::npos);
}

TEST(Cli, VerifyDirectionsExhaustive) {
  const CliRun r = run({"verify", "directions", "--q", "9", "--exhaustive"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json()["violations"], 0);
}

TEST(Cli, ReproducibleOutput) {
  const std::vector<std::string> args{"verify", "redei", "--seed", "5", "--samples", "20"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> clique{"clique", "3", "5", "11"};
  EXPECT_EQ(run(clique).out, run(clique).out);
}

TEST(Cli, TableLimitFromEnvironment) {
  setenv("PALEY_TABLE_LIMIT", "0", 1);
  const CliRun r = run({"clique", "3", "4", "20"});
  unsetenv("PALEY_TABLE_LIMIT");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["clique"]["size"], 3);
  setenv("PALEY_TABLE_LIMIT", "lots", 1);
  EXPECT_EQ(run({"field", "3", "2"}).code, 2);
  unsetenv("PALEY_TABLE_LIMIT");
}

}  // namespace
