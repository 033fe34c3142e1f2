/**
 * Deep-hole certificates: canonical JSON form and an independent verifier.
 *
 * The verifier re-derives every claim from the recorded data with plain
 * integer arithmetic and small exhaustive scans. It deliberately depends on
 * lattice_core only: no RectSimplex, no membership oracle, no lifting code.
 * See docs/certificate_schema.md for the file layout.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "holeforge/lattice_core.hpp"

namespace holeforge {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kNonNormalityStatement =
    "no pair of degree-1 generators sums to the hole";
inline constexpr const char* kClaimsDerivation =
    "skew facet: the ladder realizes every skew height 1..lambda_1+1 inside the reduced box, so "
    "every hole has skew height >= lambda_1+2, attained by the recorded hole; coordinate facet "
    "F_i: a 3-dimensional rectangular simplex has no boundary holes (height >= 1), and each lift "
    "on facet i adds beta >= 1 to that height while preserving all others";

struct LadderRung {
  std::string row;  // "p" or "2p"
  BigInt k;
  LatticePoint point;
  BigInt skew_height;
  std::vector<LatticePoint> witness;
  friend bool operator==(const LadderRung&, const LadderRung&) = default;
};

struct GoodTripleChecks {
  bool pairwise_coprime = false;
  BigInt skew_height_of_delta;
  bool lambda1_plus_2_below_lambda2 = false;
  bool lambda1_lambda3_odd = false;
  friend bool operator==(const GoodTripleChecks&, const GoodTripleChecks&) = default;
};

struct NonNormality {
  LatticePoint hole;
  BigInt skew_height;
  std::string statement = kNonNormalityStatement;
  friend bool operator==(const NonNormality&, const NonNormality&) = default;
};

struct BoundaryScanResult {
  BigInt max_degree;
  std::vector<LatticePoint> holes;
  friend bool operator==(const BoundaryScanResult&, const BoundaryScanResult&) = default;
};

struct LiftSummary {
  BigInt facet;  // 1-based
  BigInt ell;
  std::vector<BigInt> lambdas_before;
  std::vector<BigInt> lambdas_after;
  friend bool operator==(const LiftSummary&, const LiftSummary&) = default;
};

struct TransportedHole {
  LatticePoint point;
  std::vector<BigInt> coordinate_heights;
  BigInt skew_height;
  friend bool operator==(const TransportedHole&, const TransportedHole&) = default;
};

struct Claims {
  BigInt min_skew_height;
  std::vector<BigInt> min_coordinate_heights;
  BigInt min_height_all_facets;
  std::string derivation = kClaimsDerivation;
  friend bool operator==(const Claims&, const Claims&) = default;
};

struct Certificate {
  BigInt schema_version = kCertificateSchemaVersion;
  std::vector<BigInt> base_lambdas;
  GoodTripleChecks good_triple;
  std::vector<LadderRung> ladder;
  NonNormality non_normality;
  BoundaryScanResult boundary_scan;
  std::vector<LiftSummary> lift_trace;
  std::vector<BigInt> final_lambdas;
  TransportedHole transported_hole;
  Claims claims;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// ---------------------------------------------------------------------------
// Serialization

namespace cert_json {

using nlohmann::json;

inline json ints(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}
inline json point(const LatticePoint& z) { return ints(z.coords()); }
inline json points(const std::vector<LatticePoint>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(point(z));
  return a;
}

inline const json& field(const json& obj, const char* key, std::size_t expected_keys) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object around '") + key + "'");
  if (obj.size() != expected_keys)
    throw ParseError("object holding '" + std::string(key) + "' has " + std::to_string(obj.size()) +
                     " keys, expected " + std::to_string(expected_keys));
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}
inline BigInt integer(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": integers must be decimal strings");
  auto v = parse_integer(j.get<std::string>());
  if (!v) throw ParseError(std::string(what) + ": not a decimal integer: " + j.get<std::string>());
  return *v;
}
inline std::vector<BigInt> integer_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(integer(e, what));
  return out;
}
inline LatticePoint lattice_point(const json& j, const char* what) {
  auto c = integer_list(j, what);
  if (c.size() < 2) throw ParseError(std::string(what) + ": a point needs at least 2 coordinates");
  return LatticePoint(std::move(c));
}
inline std::vector<LatticePoint> point_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<LatticePoint> out;
  for (const auto& e : j) out.push_back(lattice_point(e, what));
  return out;
}
inline bool boolean(const json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + ": expected a boolean");
  return j.get<bool>();
}
inline std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

}  // namespace cert_json

inline nlohmann::json to_json(const Certificate& c) {
  using namespace cert_json;
  json ladder = json::array();
  for (const auto& r : c.ladder)
    ladder.push_back({{"row", r.row},
                      {"k", r.k.str()},
                      {"point", point(r.point)},
                      {"skew_height", r.skew_height.str()},
                      {"witness", points(r.witness)}});
  json trace = json::array();
  for (const auto& s : c.lift_trace)
    trace.push_back({{"facet", s.facet.str()},
                     {"ell", s.ell.str()},
                     {"lambdas_before", ints(s.lambdas_before)},
                     {"lambdas_after", ints(s.lambdas_after)}});
  return json{
      {"schema_version", c.schema_version.str()},
      {"base_lambdas", ints(c.base_lambdas)},
      {"good_triple",
       {{"pairwise_coprime", c.good_triple.pairwise_coprime},
        {"skew_height_of_delta", c.good_triple.skew_height_of_delta.str()},
        {"lambda1_plus_2_below_lambda2", c.good_triple.lambda1_plus_2_below_lambda2},
        {"lambda1_lambda3_odd", c.good_triple.lambda1_lambda3_odd}}},
      {"ladder", ladder},
      {"non_normality",
       {{"hole", point(c.non_normality.hole)},
        {"skew_height", c.non_normality.skew_height.str()},
        {"statement", c.non_normality.statement}}},
      {"boundary_scan",
       {{"max_degree", c.boundary_scan.max_degree.str()}, {"holes", points(c.boundary_scan.holes)}}},
      {"lift_trace", trace},
      {"final_lambdas", ints(c.final_lambdas)},
      {"transported_hole",
       {{"point", point(c.transported_hole.point)},
        {"coordinate_heights", ints(c.transported_hole.coordinate_heights)},
        {"skew_height", c.transported_hole.skew_height.str()}}},
      {"claims",
       {{"min_skew_height", c.claims.min_skew_height.str()},
        {"min_coordinate_heights", ints(c.claims.min_coordinate_heights)},
        {"min_height_all_facets", c.claims.min_height_all_facets.str()},
        {"derivation", c.claims.derivation}}},
  };
}

/// Canonical bytes: sorted keys, two-space indent, integers as strings.
inline std::string emit(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

/// Strict parse: every key must be present, no extra keys. Throws ParseError.
inline Certificate parse_certificate(const std::string& bytes) {
  using namespace cert_json;
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  Certificate c;
  c.schema_version = integer(field(root, "schema_version", 10), "schema_version");
  c.base_lambdas = integer_list(field(root, "base_lambdas", 10), "base_lambdas");

  const auto& gt = field(root, "good_triple", 10);
  c.good_triple.pairwise_coprime = boolean(field(gt, "pairwise_coprime", 4), "pairwise_coprime");
  c.good_triple.skew_height_of_delta =
      integer(field(gt, "skew_height_of_delta", 4), "skew_height_of_delta");
  c.good_triple.lambda1_plus_2_below_lambda2 =
      boolean(field(gt, "lambda1_plus_2_below_lambda2", 4), "lambda1_plus_2_below_lambda2");
  c.good_triple.lambda1_lambda3_odd = boolean(field(gt, "lambda1_lambda3_odd", 4), "lambda1_lambda3_odd");

  const auto& ladder = field(root, "ladder", 10);
  if (!ladder.is_array()) throw ParseError("ladder: expected an array");
  for (const auto& r : ladder) {
    LadderRung rung;
    rung.row = text(field(r, "row", 5), "ladder.row");
    rung.k = integer(field(r, "k", 5), "ladder.k");
    rung.point = lattice_point(field(r, "point", 5), "ladder.point");
    rung.skew_height = integer(field(r, "skew_height", 5), "ladder.skew_height");
    rung.witness = point_list(field(r, "witness", 5), "ladder.witness");
    c.ladder.push_back(std::move(rung));
  }

  const auto& nn = field(root, "non_normality", 10);
  c.non_normality.hole = lattice_point(field(nn, "hole", 3), "non_normality.hole");
  c.non_normality.skew_height = integer(field(nn, "skew_height", 3), "non_normality.skew_height");
  c.non_normality.statement = text(field(nn, "statement", 3), "non_normality.statement");

  const auto& bs = field(root, "boundary_scan", 10);
  c.boundary_scan.max_degree = integer(field(bs, "max_degree", 2), "boundary_scan.max_degree");
  c.boundary_scan.holes = point_list(field(bs, "holes", 2), "boundary_scan.holes");

  const auto& trace = field(root, "lift_trace", 10);
  if (!trace.is_array()) throw ParseError("lift_trace: expected an array");
  for (const auto& s : trace) {
    LiftSummary step;
    step.facet = integer(field(s, "facet", 4), "lift_trace.facet");
    step.ell = integer(field(s, "ell", 4), "lift_trace.ell");
    step.lambdas_before = integer_list(field(s, "lambdas_before", 4), "lift_trace.lambdas_before");
    step.lambdas_after = integer_list(field(s, "lambdas_after", 4), "lift_trace.lambdas_after");
    c.lift_trace.push_back(std::move(step));
  }
  c.final_lambdas = integer_list(field(root, "final_lambdas", 10), "final_lambdas");

  const auto& th = field(root, "transported_hole", 10);
  c.transported_hole.point = lattice_point(field(th, "point", 3), "transported_hole.point");
  c.transported_hole.coordinate_heights =
      integer_list(field(th, "coordinate_heights", 3), "transported_hole.coordinate_heights");
  c.transported_hole.skew_height = integer(field(th, "skew_height", 3), "transported_hole.skew_height");

  const auto& cl = field(root, "claims", 10);
  c.claims.min_skew_height = integer(field(cl, "min_skew_height", 4), "claims.min_skew_height");
  c.claims.min_coordinate_heights =
      integer_list(field(cl, "min_coordinate_heights", 4), "claims.min_coordinate_heights");
  c.claims.min_height_all_facets =
      integer(field(cl, "min_height_all_facets", 4), "claims.min_height_all_facets");
  c.claims.derivation = text(field(cl, "derivation", 4), "claims.derivation");
  return c;
}

// ---------------------------------------------------------------------------
// Verification

struct Verdict {
  enum class Status { Accepted, Rejected, Malformed };
  Status status = Status::Accepted;
  std::string clause;  // failing clause when rejected
  std::string detail;

  bool accepted() const noexcept { return status == Status::Accepted; }
  static Verdict accept() { return {}; }
  static Verdict reject(std::string clause, std::string detail) {
    return {Status::Rejected, std::move(clause), std::move(detail)};
  }
};

namespace verifier_detail {

struct Reject {
  std::string clause;
  std::string detail;
};

[[noreturn]] inline void fail(const std::string& clause, const std::string& detail) {
  throw Reject{clause, detail};
}

inline void require(bool ok, const char* clause, const std::string& detail) {
  if (!ok) fail(clause, detail);
}

inline std::string list_str(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + ")";
}

/// Arithmetic of Δ(λ) as the verifier sees it, rebuilt from scratch.
struct Cone {
  std::vector<BigInt> lambdas;
  BigInt L;
  std::vector<BigInt> q;  // L / λ_i

  explicit Cone(std::vector<BigInt> l) : lambdas(std::move(l)), L(1) {
    for (const auto& x : lambdas) L = lcm(L, x);
    for (const auto& x : lambdas) q.push_back(L / x);
  }
  std::size_t n() const { return lambdas.size(); }

  BigInt skew(const LatticePoint& z) const {
    BigInt s = L * z[n()];
    for (std::size_t i = 0; i < n(); ++i) s -= q[i] * z[i];
    return s;
  }
  bool saturated(const LatticePoint& z) const {
    if (z.size() != n() + 1) return false;
    for (const auto& c : z.coords())
      if (c < 0) return false;
    return skew(z) >= 0;
  }
  bool generator(const LatticePoint& z) const { return z.size() == n() + 1 && z.degree() == 1 && saturated(z); }

  /// Unique box point (0 <= z_i < λ_i) with skew height h, by per-coordinate
  /// modular inversion. Requires pairwise coprime λ.
  LatticePoint box_point(const BigInt& h) const {
    std::vector<BigInt> c(n() + 1);
    BigInt total = h;
    for (std::size_t i = 0; i < n(); ++i) {
      if (lambdas[i] == 1) {
        c[i] = 0;
        continue;
      }
      auto e = extended_gcd(floor_mod(q[i], lambdas[i]), lambdas[i]);
      if (e.g != 1) fail("transported_hole", "lambda is not pairwise coprime");
      c[i] = floor_mod(-h * e.x, lambdas[i]);
      total += q[i] * c[i];
    }
    if (floor_mod(total, L) != 0) fail("transported_hole", "box point computation inconsistent");
    c[n()] = total / L;
    return LatticePoint(std::move(c));
  }
};

/// Exhaustive scan: does z (degree 2) split as g + (z - g) with both degree-1
/// points of the saturation? g ranges over the whole box [0, z].
inline bool degree_two_split_by_box_scan(const Cone& cone, const LatticePoint& z) {
  const std::size_t n = cone.n();
  LatticePoint g = LatticePoint::zero(n + 1);
  g[n] = 1;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == n) {
      if (cone.skew(g) >= 0 && cone.saturated(z - g)) found = true;
      return;
    }
    for (BigInt t = 0; t <= z[i] && !found; ++t) {
      g[i] = t;
      self(self, i + 1);
    }
    g[i] = 0;
  };
  rec(rec, 0);
  return found;
}

/// Same question for coprime λ of any size: a degree-1 point of the saturation
/// is a vertex (skew height 0) or the box point of its skew height.
inline bool degree_two_split_by_kernel(const Cone& cone, const LatticePoint& z) {
  const std::size_t n = cone.n();
  const BigInt s = cone.skew(z);
  auto splits = [&](const LatticePoint& g) { return cone.saturated(z - g); };
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint v = LatticePoint::zero(n + 1);
    v[i] = cone.lambdas[i];
    v[n] = 1;
    if (splits(v)) return true;
  }
  for (BigInt h = 1; 2 * h <= s; ++h) {
    auto u = cone.box_point(h);
    if (u.degree() == 1 && splits(u)) return true;
  }
  return false;
}

/// Re-runs the degree <= 2 boundary scan. A degree-2 point on a facet can
/// only split into degree-1 points on the same facet.
inline void check_no_boundary_holes_degree_two(const Cone& cone) {
  const std::size_t n = cone.n();
  // facet f in 0..n-1 is F_{f+1}; f == n is the skew facet.
  for (std::size_t f = 0; f <= n; ++f) {
    auto on_facet = [&](const LatticePoint& z) { return f == n ? cone.skew(z) == 0 : z[f] == 0; };
    auto collect = [&](const BigInt& degree) {
      std::vector<LatticePoint> out;
      LatticePoint z = LatticePoint::zero(n + 1);
      z[n] = degree;
      auto rec = [&](auto&& self, std::size_t i, BigInt budget) -> void {
        if (i == n) {
          if (on_facet(z)) out.push_back(z);
          return;
        }
        if (f == n && i == n - 1) {
          // last coordinate is forced by skew height 0
          if (floor_mod(budget, cone.q[i]) == 0) {
            z[i] = budget / cone.q[i];
            self(self, i + 1, BigInt(0));
          }
          z[i] = 0;
          return;
        }
        for (BigInt t = 0; cone.q[i] * t <= budget; ++t) {
          z[i] = t;
          self(self, i + 1, budget - cone.q[i] * t);
          if (i == f) break;  // coordinate facet: z_f = 0 only
        }
        z[i] = 0;
      };
      rec(rec, 0, cone.L * degree);
      return out;
    };
    const auto gens = collect(BigInt(1));
    std::set<LatticePoint> gen_set(gens.begin(), gens.end());
    for (const auto& z : collect(BigInt(2))) {
      bool splits = false;
      for (const auto& g : gens) {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) fits = g[i] <= z[i];
        if (fits && gen_set.contains(z - g)) {
          splits = true;
          break;
        }
      }
      require(splits, "boundary_scan", "degree-2 boundary point " + z.str() + " is a hole");
    }
  }
}

inline void check(const Certificate& c) {
  // schema
  require(c.schema_version == kCertificateSchemaVersion, "schema", "unsupported schema_version");
  require(c.base_lambdas.size() == 3, "schema", "base simplex must be 3-dimensional");
  const auto& lam = c.base_lambdas;
  require(lam[0] >= 1 && lam[0] <= lam[1] && lam[1] <= lam[2], "schema",
          "base lambdas must be positive and ascending");
  const Cone base(lam);

  // good_triple
  {
    const LatticePoint d{-1, 2, -1, 0};
    const bool coprime = pairwise_coprime(lam);
    const BigInt sd = base.skew(d);
    const bool gap = lam[0] + 2 < lam[1];
    const bool odd = lam[0] % 2 == 1 && lam[2] % 2 == 1;
    require(c.good_triple.pairwise_coprime == coprime, "good_triple", "pairwise_coprime mismatch");
    require(c.good_triple.skew_height_of_delta == sd, "good_triple", "recorded skew height of delta differs from " + sd.str());
    require(c.good_triple.lambda1_plus_2_below_lambda2 == gap, "good_triple", "lambda1+2<lambda2 mismatch");
    require(c.good_triple.lambda1_lambda3_odd == odd, "good_triple", "parity mismatch");
    require(coprime, "good_triple", "lambdas not pairwise coprime");
    require(sd == 2, "good_triple", "skew height of delta is " + sd.str() + ", not 2");
    require(gap, "good_triple", "lambda_1 + 2 < lambda_2 fails");
    require(odd, "good_triple", "lambda_1 and lambda_3 must be odd");
  }

  // lift_trace
  std::vector<BigInt> lifts_per_facet(3, BigInt(0));
  std::vector<BigInt> current = lam;
  for (std::size_t t = 0; t < c.lift_trace.size(); ++t) {
    const auto& s = c.lift_trace[t];
    const std::string at = "step " + std::to_string(t + 1) + ": ";
    require(s.facet >= 1 && s.facet <= 3, "lift_trace", at + "facet out of range");
    const auto i = s.facet.convert_to<std::size_t>() - 1;
    require(s.lambdas_before == current, "lift_trace", at + "does not chain from " + list_str(current));
    BigInt ell = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) ell = lcm(ell, current[j]);
    require(s.ell == ell, "lift_trace", at + "ell should be " + ell.str());
    auto after = current;
    after[i] += ell;
    require(s.lambdas_after == after, "lift_trace", at + "lambdas_after should be " + list_str(after));
    const Cone before_cone(current), after_cone(after);
    require(before_cone.q[i] == after_cone.q[i], "lift_trace", at + "L/lambda_i != L'/lambda'_i");
    lifts_per_facet[i] += 1;
    current = after;
  }
  require(c.final_lambdas == current, "lift_trace", "final_lambdas should be " + list_str(current));
  const Cone fin(current);

  // claims (structure)
  {
    const BigInt skew_claim = lam[0] + 2;
    require(c.claims.min_skew_height == skew_claim, "claims", "min_skew_height must be lambda_1 + 2 = " + skew_claim.str());
    require(c.claims.min_coordinate_heights.size() == 3, "claims", "need three coordinate minima");
    BigInt overall = skew_claim;
    for (std::size_t i = 0; i < 3; ++i) {
      const BigInt expect = 1 + lifts_per_facet[i];
      require(c.claims.min_coordinate_heights[i] == expect, "claims",
              "min height above F_" + std::to_string(i + 1) + " must be " + expect.str());
      overall = std::min(overall, expect);
    }
    require(c.claims.min_height_all_facets == overall, "claims", "min_height_all_facets must be " + overall.str());
    require(c.claims.derivation == kClaimsDerivation, "claims", "unexpected derivation text");
  }

  // ladder
  {
    const BigInt half = (lam[0] - 1) / 2;
    const LatticePoint p{half, 1, (lam[2] - 1) / 2, 1};
    const LatticePoint d{-1, 2, -1, 0};
    require(BigInt(c.ladder.size()) == lam[0] + 1, "ladder", "expected lambda_1 + 1 rungs");
    for (std::size_t t = 0; t < c.ladder.size(); ++t) {
      const auto& r = c.ladder[t];
      const std::string at = "rung " + std::to_string(t) + ": ";
      require(r.row == "p" || r.row == "2p", "ladder", at + "row must be p or 2p");
      require(r.k >= 0 && r.k <= half, "ladder", at + "k out of range");
      const LatticePoint expect = (r.row == "p" ? p : 2 * p) + r.k * d;
      require(r.point == expect, "ladder", at + "point should be " + expect.str());
      const BigInt h = base.skew(r.point);
      require(r.skew_height == h, "ladder", at + "skew height should be " + h.str());
      require(h == BigInt(t + 1), "ladder", at + "rungs must cover skew heights 1.. in order");
      for (std::size_t i = 0; i < 3; ++i)
        require(r.point[i] >= 0 && r.point[i] < lam[i], "ladder", at + "point leaves the reduced box");
      require(BigInt(r.witness.size()) == r.point.degree(), "ladder", at + "witness size != degree");
      LatticePoint sum = LatticePoint::zero(4);
      for (const auto& g : r.witness) {
        require(g.size() == 4 && base.generator(g), "ladder", at + "witness entry " + g.str() + " is not a generator");
        sum += g;
      }
      require(sum == r.point, "ladder", at + "witness sums to " + sum.str());
    }
  }

  // non_normality
  const auto& q = c.non_normality.hole;
  {
    require(c.non_normality.statement == kNonNormalityStatement, "non_normality", "unexpected statement");
    require(q.size() == 4 && q.degree() == 2, "non_normality", "hole must be a degree-2 point in Z^4");
    require(base.saturated(q), "non_normality", "hole is not in the saturation");
    const BigInt h = base.skew(q);
    require(c.non_normality.skew_height == h, "non_normality", "skew height should be " + h.str());
    require(h == c.claims.min_skew_height, "non_normality",
            "hole skew height " + h.str() + " does not match the claimed minimum");
    require(!degree_two_split_by_box_scan(base, q), "non_normality", "hole splits as a sum of two generators");
  }

  // transported_hole
  {
    LatticePoint z = q;
    for (const auto& s : c.lift_trace) {
      const auto i = s.facet.convert_to<std::size_t>() - 1;
      BigInt beta = s.ell * z[3];
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) beta -= (s.ell / s.lambdas_before[j]) * z[j];
      require(beta >= 1, "transported_hole", "beta of the hole is not positive");
      z[i] += beta;
    }
    const auto& th = c.transported_hole;
    require(th.point == z, "transported_hole", "point should be " + z.str());
    require(fin.saturated(z), "transported_hole", "not in the saturation of the final simplex");
    require(th.coordinate_heights == std::vector<BigInt>{z[0], z[1], z[2]}, "transported_hole",
            "coordinate heights do not match the point");
    const BigInt h = fin.skew(z);
    require(th.skew_height == h, "transported_hole", "skew height should be " + h.str());
    require(h == c.non_normality.skew_height, "transported_hole", "lifting changed the skew height");
    require(pairwise_coprime(current), "transported_hole", "final lambdas not pairwise coprime");
    require(!degree_two_split_by_kernel(fin, z), "transported_hole",
            "transported point splits in the final semigroup");
    for (std::size_t i = 0; i < 3; ++i)
      require(z[i] >= c.claims.min_coordinate_heights[i], "transported_hole",
              "hole lies below the claimed height over F_" + std::to_string(i + 1));
  }

  // boundary_scan
  require(c.boundary_scan.max_degree == 2, "boundary_scan", "scan must cover degree 2");
  require(c.boundary_scan.holes.empty(), "boundary_scan", "boundary holes recorded");
  check_no_boundary_holes_degree_two(base);
}

}  // namespace verifier_detail

inline Verdict verify(const Certificate& c) {
  try {
    verifier_detail::check(c);
  } catch (const verifier_detail::Reject& r) {
    return Verdict::reject(r.clause, r.detail);
  }
  return Verdict::accept();
}

inline Verdict verify(const std::string& bytes) {
  Certificate c;
  try {
    c = parse_certificate(bytes);
  } catch (const ParseError& e) {
    return {Verdict::Status::Malformed, "parse", e.what()};
  }
  return verify(c);
}

}  // namespace holeforge
