#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abext/abelian_group.hpp"
#include "abext/cli.hpp"
#include "json.hpp"

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = abext::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       is(text);
    for (std::string line; std::getline(is, line);) {
      out.push_back(line);
    }
    return out;
  }

}  // namespace

TEST(Cli, ExtExample) {
  auto const r = run({"ext", "Z/4 x Z/2", "Z/2^2"});
  EXPECT_EQ(r.code, 0);
  auto got = lines(r.out);
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"Z/4 x Z/2^3", "Z/4^2 x Z/2", "Z/8 x Z/2^2", "Z/8 x Z/4"};
  EXPECT_EQ(got, want);
}

TEST(Cli, ExtCheck) {
  auto const yes = run({"ext", "--check", "Z/4^5", "Z/4^2 x Z/2", "Z/4^2 x Z/2"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "criterion: true\noracle: true\n");
  auto const no = run({"ext", "--check", "Z/16", "Z/4 x Z/2", "Z/2^2"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "criterion: false\noracle: false\n");
  auto const big = run({"ext", "--check", "--oracle-bound", "64", "Z/4^5",
                        "Z/4^2 x Z/2", "Z/4^2 x Z/2"});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("oracle: skipped"), std::string::npos);
  auto const json = run({"--format", "json", "ext", "--check", "Z/8", "Z/2", "Z/4"});
  auto const j    = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["criterion"], true);
  EXPECT_EQ(j["oracle"], true);
}

TEST(Cli, ExtArity) {
  EXPECT_EQ(run({"ext", "Z/2"}).code, 64);
  EXPECT_EQ(run({"ext", "Z/2", "Z/2", "Z/4"}).code, 64);
  EXPECT_EQ(run({"ext", "--check", "Z/2", "Z/2"}).code, 64);
}

TEST(Cli, LrCommands) {
  auto const e = run({"lr-expand", "[2,1]", "[1,1]"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "[3,2] 1\n[3,1,1] 1\n[2,2,1] 1\n[2,1,1,1] 1\n");
  auto const c = run({"lr-coeff", "[2,1]", "[2,1]", "[3,2,1]"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "2\n");
  auto const j = nlohmann::json::parse(run({"lr-expand", "--format", "json", "[1]", "[1]"}).out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["partition"], nlohmann::json::array({2}));
  EXPECT_EQ(j[0]["multiplicity"], 1);
  EXPECT_EQ(run({"lr-coeff", "[2,1]", "[1]"}).code, 64);
  EXPECT_EQ(run({"lr-expand", "[2,x]", "[1]"}).code, 64);
}

TEST(Cli, Member) {
  auto const yes = run({"member", "Z/3^6", "--family", "PA4p"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "true\n");
  auto const no = run({"member", "Z/4^5", "--family", "PA4p"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "false\n");
  EXPECT_EQ(run({"member", "Z/2", "--family", "Nope"}).code, 64);
  EXPECT_EQ(run({"member", "Z/2"}).code, 64);
}

TEST(Cli, Enumerate) {
  auto const r = run({"enumerate", "--family", "A2", "--bound", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\nZ/2\nZ/3\nZ/2^2\nZ/4\n");  // by order, then text
  EXPECT_EQ(run({"enumerate", "--family", "A2", "--bound", "0"}).code, 64);
  EXPECT_EQ(run({"enumerate", "--family", "PA4p", "--bound", "1000000000000"}).code, 3);
}

TEST(Cli, TablesJson) {
  auto const r = run({"tables", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0]["title"], "Table 1. The set of groups A1 = B1");
  EXPECT_EQ(j[5]["rows"].size(), 17u);
}

TEST(Cli, VerifyExitCodes) {
  auto const pass = run({"verify", "thm-main", "--bound", "64"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("Z/4^5"), std::string::npos);
  EXPECT_EQ(run({"verify", "prop-product-types", "--bound", "16"}).code, 2);
  EXPECT_EQ(run({"verify", "regressions"}).code, 0);
  EXPECT_EQ(run({"verify", "no-such-claim"}).code, 64);
  EXPECT_EQ(run({"verify", "thm-main", "--bound", "0"}).code, 64);
}

TEST(Cli, VerifyJsonMatchesText) {
  auto const j = nlohmann::json::parse(
      run({"verify", "prop-product-types", "--format", "json"}).out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["vacuous"], false);
  auto const text = run({"verify", "prop-product-types"}).out;
  for (auto const& w : j["witnesses"]) {
    EXPECT_NE(text.find(w.get<std::string>()), std::string::npos);
  }
  EXPECT_NE(text.find("verdict: pass"), std::string::npos);
}

TEST(Cli, EmittedGroupsReparse) {
  for (auto const& line : lines(run({"ext", "Z/12 x Z/2", "Z/6 x Z/3"}).out)) {
    EXPECT_EQ(abext::format_group(abext::parse_group(line)), line);
  }
  for (auto const& line : lines(run({"enumerate", "--family", "B3p", "--bound", "200"}).out)) {
    EXPECT_EQ(abext::format_group(abext::parse_group(line)), line);
  }
}

TEST(Cli, OutputIndependentOfJobs) {
  auto const a = run({"--jobs", "1", "verify", "thm-second", "--format", "json"});
  auto const b = run({"--jobs", "3", "verify", "thm-second", "--format", "json"});
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("elapsed_seconds");
  jb.erase("elapsed_seconds");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, OutFile) {
  auto const path = std::filesystem::temp_directory_path() / "abext_cli_out.txt";
  std::filesystem::remove(path);
  auto const r = run({"--out", path.string(), "lr-coeff", "[1]", "[1]", "[2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string   content((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(content, "1\n");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"tables", "--bogus"}).code, 64);
  EXPECT_EQ(run({"--format", "xml", "tables"}).code, 64);
  EXPECT_EQ(run({"ext", "Z/0", "1"}).code, 64);
  EXPECT_EQ(run({"ext", "Z/2^200", "Z/2^200"}).code, 3);
}

TEST(Cli, VersionAndHelp) {
  auto const v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("abext 1.0.0"), std::string::npos);
  auto const h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  for (auto const* cmd : {"lr-expand", "lr-coeff", "ext", "member", "enumerate",
                          "tables", "verify"}) {
    EXPECT_NE(h.out.find(cmd), std::string::npos) << cmd;
  }
}

TEST(Cli, PropsFixedSeed) {
  auto const a = run({"--seed", "7", "props", "--instances", "50"});
  auto const b = run({"--seed", "7", "props", "--instances", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed: 7"), std::string::npos);
}
