/**
 * Good triples (λ_1, λ_2, λ_3): pairwise coprime, σ_λ(δ) = 2 with
 * δ = (-1, 2, -1, 0), and λ_1 + 2 < λ_2. For these Q(λ) is not normal and
 * every hole sits at skew height >= λ_1 + 2.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holeforge/certificates.hpp"
#include "holeforge/lattice_core.hpp"
#include "holeforge/rect_simplex.hpp"
#include "holeforge/semigroup_oracle.hpp"

namespace holeforge {

struct GoodTripleCheck {
  bool good = false;
  int failed_condition = 0;  // 1, 2 or 3; 0 when good
  std::string reason;

  explicit operator bool() const noexcept { return good; }
};

/// λ_2λ_3 - 2λ_1λ_3 + λ_1λ_2, i.e. σ_λ(δ) when λ is pairwise coprime.
inline BigInt delta_condition_value(const BigInt& a, const BigInt& b, const BigInt& c) {
  return b * c - 2 * a * c + a * b;
}

inline GoodTripleCheck is_good_triple(const std::vector<BigInt>& l) {
  if (l.size() != 3) throw ArgumentError("a good triple has exactly three entries");
  for (const auto& v : l)
    if (v < 1) throw ArgumentError("good triple entries must be positive");
  if (!(l[0] <= l[1] && l[1] <= l[2])) throw ArgumentError("good triple entries must be sorted ascending");

  if (!pairwise_coprime(l)) return {false, 1, "condition 1: entries are not pairwise coprime"};
  if (auto v = delta_condition_value(l[0], l[1], l[2]); v != 2)
    return {false, 2, "condition 2: lambda2*lambda3 - 2*lambda1*lambda3 + lambda1*lambda2 = " + v.str() + ", not 2"};
  if (!(l[0] + 2 < l[1])) return {false, 3, "condition 3: lambda1 + 2 < lambda2 fails"};
  return {true, 0, "good triple"};
}

class GoodTriple {
 public:
  explicit GoodTriple(std::vector<BigInt> lambdas) : lambdas_(std::move(lambdas)) {
    if (auto c = is_good_triple(lambdas_); !c) throw ArgumentError("not a good triple: " + c.reason);
    // Pairwise coprime plus condition 2 force both outer entries odd.
    if (lambdas_[0] % 2 == 0 || lambdas_[2] % 2 == 0)
      throw ArithmeticError("good triple with an even outer entry");
  }

  const std::vector<BigInt>& lambdas() const noexcept { return lambdas_; }
  const BigInt& lambda(std::size_t i) const { return lambdas_.at(i - 1); }
  RectSimplex simplex() const { return RectSimplex(lambdas_); }

  /// p = (v_1 + v_3 + δ)/2 = ((λ_1-1)/2, 1, (λ_3-1)/2, 1), skew height 1.
  LatticePoint base_point() const {
    return LatticePoint{(lambdas_[0] - 1) / 2, 1, (lambdas_[2] - 1) / 2, 1};
  }

  /// Largest ladder step (λ_1 - 1)/2.
  BigInt max_step() const { return (lambdas_[0] - 1) / 2; }

  friend bool operator==(const GoodTriple&, const GoodTriple&) = default;

 private:
  std::vector<BigInt> lambdas_;
};

/// (m, 2m - 1, 2m^2 - m - 2) for odd m >= 5.
inline GoodTriple family(const BigInt& lambda1) {
  if (lambda1 < 5 || lambda1 % 2 == 0)
    throw ArgumentError("family: lambda1 must be odd and >= 5, got " + lambda1.str());
  return GoodTriple({lambda1, 2 * lambda1 - 1, 2 * lambda1 * lambda1 - lambda1 - 2});
}

/**
 * All good triples with λ_3 <= max_lambda3, sorted lexicographically.
 * Scans every (λ_1, λ_2); condition 2 is linear in λ_3, so it pins λ_3 to
 * (λ_1λ_2 - 2)/(2λ_1 - λ_2) when that is an integer.
 */
inline std::vector<GoodTriple> search_good_triples(std::int64_t max_lambda3) {
  std::vector<GoodTriple> out;
  for (std::int64_t a = 1; a <= max_lambda3; ++a) {
    for (std::int64_t b = a + 3; b <= max_lambda3; ++b) {
      const std::int64_t den = 2 * a - b;
      if (den <= 0) break;
      const std::int64_t num = a * b - 2;
      if (num % den != 0) continue;
      const std::int64_t c = num / den;
      if (c < b || c > max_lambda3) continue;
      std::vector<BigInt> l{a, b, c};
      if (is_good_triple(l)) out.emplace_back(std::move(l));
    }
  }
  return out;
}

/// q = (λ_1 - 1, λ_1 + 2, (λ_3 - λ_1)/2 - 1, 2), a hole at skew height λ_1 + 2.
inline LatticePoint witness_hole(const GoodTriple& t) {
  const auto& l = t.lambdas();
  return LatticePoint{l[0] - 1, l[0] + 2, (l[2] - l[0]) / 2 - 1, 2};
}

struct Ladder {
  std::vector<LadderRung> rungs;  // sorted by skew height 1..λ_1+1
};

/// p + kδ (skew height 2k+1) and 2p + kδ (skew height 2k+2) for
/// 0 <= k <= (λ_1-1)/2, each with a membership witness.
inline Ladder build_ladder(const GoodTriple& t, SemigroupOracle& oracle) {
  const RectSimplex& s = oracle.simplex();
  if (s.lambdas() != t.lambdas()) throw ArgumentError("oracle is for a different simplex");
  const LatticePoint p = t.base_point();
  const LatticePoint d = delta(3);
  Ladder ladder;
  for (BigInt k = 0; k <= t.max_step(); ++k) {
    for (const char* row : {"p", "2p"}) {
      LatticePoint z = (std::string(row) == "p" ? p : 2 * p) + k * d;
      auto w = oracle.member(z);
      if (!w || w->sum(4) != z)
        throw ArithmeticError("ladder point " + z.str() + " has no membership witness");
      ladder.rungs.push_back({row, k, z, s.skew_height(z), std::move(w->summands)});
    }
  }
  std::sort(ladder.rungs.begin(), ladder.rungs.end(),
            [](const LadderRung& a, const LadderRung& b) { return a.skew_height < b.skew_height; });
  return ladder;
}

inline Ladder build_ladder(const GoodTriple& t) {
  SemigroupOracle oracle(t.simplex());
  return build_ladder(t, oracle);
}

/// Brute force over generator pairs: is z = g + g' for generators g, g'?
inline bool splits_into_generator_pair(const std::vector<LatticePoint>& sorted_generators,
                                       const LatticePoint& z) {
  for (const auto& g : sorted_generators)
    if (std::binary_search(sorted_generators.begin(), sorted_generators.end(), z - g)) return true;
  return false;
}

/**
 * Certificate for a single good triple (no lifting). Every clause is checked
 * here before it is recorded; a failure throws CertificationError naming the
 * clause.
 */
inline Certificate certify(const GoodTriple& t) {
  const RectSimplex s = t.simplex();
  const auto& l = t.lambdas();
  SemigroupOracle oracle(s);

  Certificate c;
  c.base_lambdas = l;
  c.good_triple.pairwise_coprime = pairwise_coprime(l);
  c.good_triple.skew_height_of_delta = s.skew_height(delta(3));
  c.good_triple.lambda1_plus_2_below_lambda2 = l[0] + 2 < l[1];
  c.good_triple.lambda1_lambda3_odd = l[0] % 2 == 1 && l[2] % 2 == 1;
  if (!c.good_triple.pairwise_coprime || c.good_triple.skew_height_of_delta != 2 ||
      !c.good_triple.lambda1_plus_2_below_lambda2 || !c.good_triple.lambda1_lambda3_odd)
    throw CertificationError("good_triple", "conditions do not hold");

  Ladder ladder = build_ladder(t, oracle);
  for (std::size_t k = 0; k < ladder.rungs.size(); ++k) {
    const auto& r = ladder.rungs[k];
    if (r.skew_height != BigInt(k + 1))
      throw CertificationError("ladder", "skew heights do not cover 1..lambda_1+1");
    for (std::size_t i = 1; i <= 3; ++i)
      if (r.point.coord(i) >= s.lambda(i))
        throw CertificationError("ladder", r.point.str() + " is outside the reduced box");
  }
  c.ladder = std::move(ladder.rungs);

  const LatticePoint q = witness_hole(t);
  if (!in_saturation(s, q)) throw CertificationError("non_normality", "witness not in the saturation");
  if (oracle.contains(q) || splits_into_generator_pair(oracle.generators(), q))
    throw CertificationError("non_normality", "witness " + q.str() + " is a member");
  c.non_normality.hole = q;
  c.non_normality.skew_height = s.skew_height(q);
  if (c.non_normality.skew_height != l[0] + 2)
    throw CertificationError("non_normality", "witness skew height is not lambda_1 + 2");

  c.boundary_scan.max_degree = 2;
  c.boundary_scan.holes = boundary_hole_scan(s, 2);
  if (!c.boundary_scan.holes.empty())
    throw CertificationError("boundary_scan", "boundary hole " + c.boundary_scan.holes.front().str());

  c.final_lambdas = l;
  c.transported_hole = {q, {q[0], q[1], q[2]}, c.non_normality.skew_height};
  c.claims.min_skew_height = l[0] + 2;
  c.claims.min_coordinate_heights = {1, 1, 1};
  c.claims.min_height_all_facets = 1;
  return c;
}

}  // namespace holeforge
