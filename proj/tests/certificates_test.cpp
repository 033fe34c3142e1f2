#include <gtest/gtest.h>

#include "holeforge/good_triples.hpp"
#include "holeforge/lifting.hpp"
#include "mutation.hpp"
#include "test_support.hpp"

namespace holeforge {
namespace {

using testing::L;
using testing::P;

const std::string& cert5943() {
  static const std::string bytes = emit(certify(family(5)));
  return bytes;
}

TEST(Emit, MinSkewHeightAsString) {
  EXPECT_NE(cert5943().find("\"min_skew_height\": \"7\""), std::string::npos);
}

TEST(Emit, ByteStable) { EXPECT_EQ(emit(certify(family(5))), cert5943()); }

TEST(Emit, RoundTrip) {
  const auto c = certify(family(5));
  EXPECT_EQ(parse_certificate(emit(c)), c);
  const auto k3 = deep_hole_construction(3).certificate;
  EXPECT_EQ(parse_certificate(emit(k3)), k3);
}

TEST(Emit, HugeIntegersSurviveAsStrings) {
  auto c = certify(family(5));
  const BigInt big = (BigInt(1) << 90) + 12345;
  c.transported_hole.skew_height = big;
  const auto bytes = emit(c);
  EXPECT_NE(bytes.find("\"" + big.str() + "\""), std::string::npos);
  EXPECT_EQ(parse_certificate(bytes).transported_hole.skew_height, big);
}

TEST(Parse, Strictness) {
  EXPECT_THROW(parse_certificate("{"), ParseError);
  EXPECT_THROW(parse_certificate("[]"), ParseError);
  auto j = nlohmann::json::parse(cert5943());
  j["schema_version"] = 1;  // number instead of string
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
  j = nlohmann::json::parse(cert5943());
  j["extra"] = "x";
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
  j = nlohmann::json::parse(cert5943());
  j.erase("claims");
  EXPECT_THROW(parse_certificate(j.dump()), ParseError);
}

TEST(Verify, AcceptsCertifiedTriple) {
  const auto v = verify(cert5943());
  EXPECT_TRUE(v.accepted()) << v.clause << ": " << v.detail;
}

TEST(Verify, CorruptedLadderWitnessRejected) {
  auto c = parse_certificate(cert5943());
  c.ladder[1].witness[0][2] += 1;
  const auto v = verify(emit(c));
  EXPECT_EQ(v.status, Verdict::Status::Rejected);
  EXPECT_EQ(v.clause, "ladder");
}

TEST(Verify, OverclaimedSkewHeightRejected) {
  auto c = parse_certificate(cert5943());
  c.claims.min_skew_height = 8;
  auto v = verify(emit(c));
  EXPECT_FALSE(v.accepted());
  EXPECT_EQ(v.clause, "claims");
  // also raising the recorded hole height cannot hide the hole at 7
  c.non_normality.skew_height = 8;
  v = verify(emit(c));
  EXPECT_FALSE(v.accepted());
}

TEST(Verify, SplittablePointAsHoleRejected) {
  auto c = parse_certificate(cert5943());
  c.non_normality.hole = P({4, 2, 42, 2});  // 2p, a member
  EXPECT_EQ(verify(c).clause, "non_normality");
}

TEST(Verify, BrokenLiftRejected) {
  auto c = deep_hole_construction(2).certificate;
  ASSERT_TRUE(verify(c).accepted()) << verify(c).detail;
  c.lift_trace[0].ell += 1;
  EXPECT_EQ(verify(c).clause, "lift_trace");
}

TEST(Verify, TransportedPointMustBeHole) {
  auto c = deep_hole_construction(2).certificate;
  c.transported_hole.point[0] += 1;
  EXPECT_EQ(verify(c).clause, "transported_hole");
}

TEST(Verify, MalformedIsDistinctFromRejected) {
  EXPECT_EQ(verify(std::string("not json")).status, Verdict::Status::Malformed);
  EXPECT_EQ(verify(std::string("{}")).status, Verdict::Status::Malformed);
}

TEST(Properties, SingleFieldMutationsRejectedOrEquivalent) {
  std::mt19937_64 gen(7);
  const auto k2 = emit(deep_hole_construction(2).certificate);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& base = trial % 2 ? cert5943() : k2;
    const auto mutated = testing::mutate_once(base, gen);
    EXPECT_TRUE(testing::mutation_handled(base, mutated)) << mutated;
  }
}

TEST(Properties, EveryGeneratedTripleVerifies) {
  std::vector<GoodTriple> triples;
  for (long m = 5; 2 * m * m - m - 2 <= 200; m += 2) triples.push_back(family(m));
  for (const auto& t : search_good_triples(200)) {
    const auto& l = t.lambdas();
    if (l[0] * l[1] * l[2] <= 36000 && std::find(triples.begin(), triples.end(), t) == triples.end())
      triples.push_back(t);
  }
  ASSERT_GE(triples.size(), 10u);
  for (const auto& t : triples) {
    const auto v = verify(emit(certify(t)));
    EXPECT_TRUE(v.accepted()) << t.lambda(1) << "," << t.lambda(2) << "," << t.lambda(3) << ": " << v.clause << " "
                              << v.detail;
  }
}

}  // namespace
}  // namespace holeforge
