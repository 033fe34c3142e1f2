/**
 * Lifting λ -> λ' along one coordinate facet.
 *
 * For a facet index i let ℓ = lcm(λ_j : j != i) and λ'_i = λ_i + ℓ, other
 * entries unchanged. The linear form
 *
 *     β(z) = ℓ z_{n+1} - Σ_{j != i} (ℓ/λ_j) z_j
 *
 * does not involve z_i, and α(z) = z + β(z) e_i is a unimodular map with
 * σ_{λ'}(α(z)) = σ_λ(z). It keeps every height except σ_i and pushes holes
 * strictly away from F_i.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "holeforge/certificates.hpp"
#include "holeforge/good_triples.hpp"
#include "holeforge/lattice_core.hpp"
#include "holeforge/rect_simplex.hpp"
#include "holeforge/semigroup_oracle.hpp"

namespace holeforge {

struct LiftStep {
  std::size_t facet_index = 0;  // 1-based
  BigInt ell;
  std::vector<BigInt> lambda_before;
  std::vector<BigInt> lambda_after;
  LinearForm beta_coeffs;

  friend bool operator==(const LiftStep&, const LiftStep&) = default;
};

using LiftTrace = std::vector<LiftStep>;

inline LiftStep lift_lambda(const std::vector<BigInt>& lambdas, std::size_t i) {
  const std::size_t n = lambdas.size();
  if (n < 2) throw ArgumentError("lift_lambda needs n >= 2");
  if (i < 1 || i > n) throw ArgumentError("lift_lambda: facet index " + std::to_string(i) + " out of range");
  for (const auto& v : lambdas)
    if (v < 1) throw ArgumentError("lift_lambda: lambda entries must be positive");

  LiftStep step;
  step.facet_index = i;
  step.lambda_before = lambdas;
  std::vector<BigInt> others;
  for (std::size_t j = 1; j <= n; ++j)
    if (j != i) others.push_back(lambdas[j - 1]);
  step.ell = lcm_all(others);
  step.lambda_after = lambdas;
  step.lambda_after[i - 1] += step.ell;

  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  for (std::size_t j = 1; j <= n; ++j)
    if (j != i) coeffs[j - 1] = -(step.ell / lambdas[j - 1]);
  coeffs[n] = step.ell;
  step.beta_coeffs = LinearForm(std::move(coeffs));

  // L/λ_i = L'/λ'_i, since gcd(ℓ, λ_i) = gcd(ℓ, λ_i + ℓ).
  const BigInt L = lcm_all(step.lambda_before);
  const BigInt L2 = lcm_all(step.lambda_after);
  if (L / lambdas[i - 1] != L2 / step.lambda_after[i - 1] || L % lambdas[i - 1] != 0)
    throw ArithmeticError("lift step breaks L/lambda_i = L'/lambda'_i");
  return step;
}

inline BigInt beta(const LiftStep& step, const LatticePoint& z) { return dot(step.beta_coeffs, z); }

inline LatticePoint alpha(const LiftStep& step, const LatticePoint& z) {
  LatticePoint out = z;
  out[step.facet_index - 1] += beta(step, z);
  return out;
}

inline LatticePoint alpha_inverse(const LiftStep& step, const LatticePoint& z) {
  LatticePoint out = z;
  out[step.facet_index - 1] -= beta(step, z);
  return out;
}

/// α along every step of the trace, in order.
inline LatticePoint transport(const LiftTrace& trace, LatticePoint z) {
  for (const auto& step : trace) z = alpha(step, z);
  return z;
}

struct Construction {
  LiftTrace trace;
  RectSimplex simplex;
  Certificate certificate;
  GoodTriple base;
};

/// Smallest odd λ_1 >= max(5, k - 2); then λ_1 + 2 >= k.
inline BigInt construction_lambda1(const BigInt& k) {
  BigInt m = std::max(BigInt(5), k - 2);
  if (m % 2 == 0) ++m;
  return m;
}

/// Lift steps applied to each coordinate facet.
inline BigInt lifts_per_facet(const BigInt& k) { return std::max(BigInt(0), k - 1); }

/**
 * A 3-simplex whose semigroup is not normal and whose holes all lie at
 * height >= k above every facet.
 *
 * Starts from the good triple family(λ_1): holes sit at skew height
 * >= λ_1 + 2 >= k and, lacking boundary holes, at coordinate height >= 1.
 * Each facet 1, 2, 3 is then lifted k - 1 times; a lift raises the holes'
 * height over its facet by β >= 1 and leaves the other heights alone.
 */
inline Construction deep_hole_construction(const BigInt& k) {
  if (k < 0) throw ArgumentError("deep_hole_construction: k must be non-negative");
  GoodTriple base = family(construction_lambda1(k));
  Certificate cert = certify(base);

  LiftTrace trace;
  std::vector<BigInt> lambdas = base.lambdas();
  LatticePoint hole = cert.non_normality.hole;
  const BigInt rounds = lifts_per_facet(k);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (BigInt r = 0; r < rounds; ++r) {
      LiftStep step = lift_lambda(lambdas, i);
      if (beta(step, hole) < 1) throw CertificationError("lift_trace", "beta of the hole is not positive");
      hole = alpha(step, hole);
      lambdas = step.lambda_after;
      cert.lift_trace.push_back({BigInt(i), step.ell, step.lambda_before, step.lambda_after});
      trace.push_back(std::move(step));
    }
  }

  RectSimplex final_simplex(lambdas);
  if (!in_saturation(final_simplex, hole) || degree_two_member(final_simplex, hole))
    throw CertificationError("transported_hole", "transported witness " + hole.str() + " is not a hole");

  cert.final_lambdas = lambdas;
  cert.transported_hole = {hole, {hole[0], hole[1], hole[2]}, final_simplex.skew_height(hole)};
  cert.claims.min_coordinate_heights.assign(3, 1 + rounds);
  cert.claims.min_height_all_facets = std::min(cert.claims.min_skew_height, 1 + rounds);
  if (cert.claims.min_height_all_facets < k)
    throw ArithmeticError("construction misses the target height");
  return {std::move(trace), std::move(final_simplex), std::move(cert), std::move(base)};
}

}  // namespace holeforge
