#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "holeforge/cli.hpp"

namespace holeforge::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(HOLEFORGE_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

TEST(Cli, MemberHole) {
  auto r = run_cli({"member", "5", "9", "43", "--", "4", "7", "18", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not in Q(lambda); in saturation; hole\n");
}

TEST(Cli, MemberWitnessAndNegativeCoordinates) {
  auto r = run_cli({"member", "5", "9", "43", "--", "2", "1", "21", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "in Q(lambda); witness: (2,1,21,1)\n");
  r = run_cli({"member", "5", "9", "43", "--", "-1", "0", "0", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not in Q(lambda); not in saturation\n");
  r = run_cli({"--format", "json", "member", "1", "1", "1", "--", "1", "1", "0", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["witness"].size(), 2u);
}

TEST(Cli, MemberUsageErrors) {
  EXPECT_EQ(run_cli({"member", "5", "9", "43"}).code, 2);
  EXPECT_EQ(run_cli({"member", "5", "9", "43", "--", "1", "2"}).code, 2);
  EXPECT_EQ(run_cli({"member", "5", "x", "43", "--", "1", "2", "3", "4"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(Cli, Simplex) {
  auto r = run_cli({"simplex", "2", "3", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("L = 30"), std::string::npos);
  EXPECT_NE(r.out.find("sigma(F_lambda) = (-15,-10,-6,30)"), std::string::npos);
  EXPECT_NE(r.out.find("degree-1 generators: 18"), std::string::npos);
}

TEST(Cli, GeneratorGuardIsAResourceError) {
  EXPECT_EQ(run_cli({"--max-generators", "10", "simplex", "5", "9", "43"}).code, 2);
}

TEST(Cli, GoodTriple) {
  EXPECT_EQ(run_cli({"good-triple", "--check", "5", "9", "43"}).code, 0);
  auto r = run_cli({"good-triple", "--check", "5", "9", "44"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("condition 2"), std::string::npos);
  EXPECT_EQ(run_cli({"good-triple", "--from-lambda1", "7"}).out, "(7,13,89)\n");
  EXPECT_EQ(run_cli({"good-triple", "--from-lambda1", "4"}).code, 2);
  r = run_cli({"good-triple", "--search", "43"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(5,9,43)"), std::string::npos);
  EXPECT_EQ(run_cli({"good-triple"}).code, 2);
}

TEST(Cli, HolesCsv) {
  auto r = run_cli({"--format", "csv", "holes", "5", "9", "43", "--max-skew-height", "20"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "z1,z2,z3,degree,skew_height,height_F1,height_F2,height_F3");
  EXPECT_EQ(first, "4,7,18,2,7,4,7,18");
}

TEST(Cli, HolesDeterministicAcrossThreads) {
  auto a = run_cli({"--format", "json", "holes", "7", "13", "89", "--max-skew-height", "80"});
  auto b = run_cli({"--format", "json", "holes", "7", "13", "89", "--max-skew-height", "80", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CertifyConstructVerify) {
  const auto f = tmp("c5943.holecert.json");
  auto r = run_cli({"certify", "5", "9", "43", "-o", f});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run_cli({"verify", f}).code, 0);

  const auto k0 = tmp("k0.holecert.json");
  ASSERT_EQ(run_cli({"construct", "--k", "0", "-o", k0}).code, 0);
  EXPECT_EQ(slurp(k0), slurp(f));
  EXPECT_EQ(run_cli({"verify", k0}).code, 0);

  for (const char* k : {"2", "3", "5"}) {
    const auto path = tmp(std::string("k") + k + ".holecert.json");
    ASSERT_EQ(run_cli({"construct", "--k", k, "-o", path}).code, 0);
    auto v = run_cli({"verify", path});
    EXPECT_EQ(v.code, 0) << v.out;
  }

  auto c = parse_certificate(slurp(f));
  c.claims.min_skew_height = 8;
  const auto bad = tmp("bad.holecert.json");
  std::ofstream(bad) << emit(c);
  r = run_cli({"verify", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("rejected"), std::string::npos);

  std::ofstream(tmp("garbage.json")) << "nope";
  EXPECT_EQ(run_cli({"verify", tmp("garbage.json")}).code, 2);
  EXPECT_EQ(run_cli({"verify", tmp("missing.json")}).code, 2);
}

TEST(Cli, ConstructToStdoutIsByteIdentical) {
  auto a = run_cli({"construct", "--k", "3"});
  auto b = run_cli({"construct", "--k", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(verify(a.out).accepted());
}

TEST(Cli, Lift) {
  auto r = run_cli({"lift", "5", "9", "43", "--facet", "1", "--", "4", "7", "18", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ell = 387, (5,9,43) -> (392,9,43)"), std::string::npos);
  EXPECT_NE(r.out.find("alpha(z) = (315,7,18,2), skew height 7 -> 7"), std::string::npos);
  r = run_cli({"--format", "json", "lift", "5", "9", "43", "--facet", "2", "--times", "2"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["final_lambdas"], nlohmann::json({"5", "439", "43"}));
  EXPECT_EQ(run_cli({"lift", "5", "9", "43", "--facet", "4"}).code, 2);
}

}  // namespace
}  // namespace holeforge::cli
