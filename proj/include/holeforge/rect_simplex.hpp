/**
 * Rectangular simplices Δ(λ) ⊂ R^{n+1}.
 *
 * Vertices are v_0 = e_{n+1} and v_i = λ_i e_i + e_{n+1}. The facets are the
 * n coordinate hyperplanes F_i with height σ_i(z) = z_i, and the skew facet
 * F_λ spanned by v_1..v_n with height
 *
 *     σ_λ(z) = L z_{n+1} - Σ_i (L/λ_i) z_i,   L = lcm(λ_1..λ_n).
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "holeforge/lattice_core.hpp"

namespace holeforge {

inline constexpr std::size_t kDefaultGeneratorLimit = 5'000'000;

/// Generator guard; HOLEFORGE_MAX_GENERATORS overrides the default.
inline std::size_t default_generator_limit() {
  if (const char* env = std::getenv("HOLEFORGE_MAX_GENERATORS")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ArgumentError(std::string("HOLEFORGE_MAX_GENERATORS is not a positive integer: ") + env);
  }
  return kDefaultGeneratorLimit;
}

class FacetId {
 public:
  enum class Kind { Coordinate, Skew };

  static FacetId coordinate(std::size_t i) {
    if (i < 1) throw ArgumentError("coordinate facet index must be >= 1");
    return FacetId(Kind::Coordinate, i);
  }
  static FacetId skew() { return FacetId(Kind::Skew, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_skew() const noexcept { return kind_ == Kind::Skew; }
  /// 1-based index for coordinate facets; 0 for the skew facet.
  std::size_t index() const noexcept { return index_; }

  std::string name() const { return is_skew() ? "F_lambda" : "F_" + std::to_string(index_); }

  /// Coordinate facets first (by index), skew facet last.
  friend auto operator<=>(const FacetId& a, const FacetId& b) {
    return std::pair(a.kind_, a.index_) <=> std::pair(b.kind_, b.index_);
  }
  friend bool operator==(const FacetId&, const FacetId&) = default;

 private:
  FacetId(Kind k, std::size_t i) : kind_(k), index_(i) {}
  Kind kind_;
  std::size_t index_;
};

class RectSimplex {
 public:
  explicit RectSimplex(std::vector<BigInt> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw ArgumentError("rectangular simplex needs n >= 1");
    for (std::size_t i = 0; i < lambdas_.size(); ++i)
      if (lambdas_[i] < 1)
        throw ArgumentError("lambda_" + std::to_string(i + 1) + " = " + lambdas_[i].str() +
                            " is not positive");
    lcm_ = lcm_all(lambdas_);

    const std::size_t len = lambdas_.size() + 1;
    vertices_.push_back(LatticePoint::unit(len, len));
    for (std::size_t i = 1; i <= lambdas_.size(); ++i)
      vertices_.push_back(lambdas_[i - 1] * LatticePoint::unit(len, i) + vertices_[0]);

    std::vector<BigInt> skew(len);
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
      quotients_.push_back(lcm_ / lambdas_[i]);
      skew[i] = -quotients_.back();
    }
    skew.back() = lcm_;
    skew_form_ = LinearForm(std::move(skew));
  }

  std::size_t dimension() const noexcept { return lambdas_.size(); }
  const std::vector<BigInt>& lambdas() const noexcept { return lambdas_; }
  /// 1-based.
  const BigInt& lambda(std::size_t i) const { return lambdas_.at(i - 1); }
  const BigInt& lcm() const noexcept { return lcm_; }
  /// L / λ_i, 1-based.
  const BigInt& quotient(std::size_t i) const { return quotients_.at(i - 1); }

  /// v_0 .. v_n.
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_.at(i); }

  const LinearForm& skew_form() const noexcept { return skew_form_; }
  LinearForm coordinate_form(std::size_t i) const {
    check_facet(FacetId::coordinate(i));
    std::vector<BigInt> c(dimension() + 1, BigInt(0));
    c[i - 1] = 1;
    return LinearForm(std::move(c));
  }
  LinearForm form(FacetId f) const {
    return f.is_skew() ? skew_form_ : coordinate_form(f.index());
  }

  /// σ_1..σ_n, σ_λ in that order.
  std::vector<LinearForm> facet_forms() const {
    std::vector<LinearForm> out;
    for (std::size_t i = 1; i <= dimension(); ++i) out.push_back(coordinate_form(i));
    out.push_back(skew_form_);
    return out;
  }

  std::vector<FacetId> facets() const {
    std::vector<FacetId> out;
    for (std::size_t i = 1; i <= dimension(); ++i) out.push_back(FacetId::coordinate(i));
    out.push_back(FacetId::skew());
    return out;
  }

  BigInt skew_height(const LatticePoint& z) const { return dot(skew_form_, z); }

  void check_facet(FacetId f) const {
    if (!f.is_skew() && (f.index() < 1 || f.index() > dimension()))
      throw ArgumentError("facet " + f.name() + " does not exist for n = " +
                          std::to_string(dimension()));
  }

  void check_point(const LatticePoint& z) const {
    if (z.size() != dimension() + 1)
      throw DimensionError("point " + z.str() + " does not have length n+1 = " +
                           std::to_string(dimension() + 1));
  }

  friend bool operator==(const RectSimplex& a, const RectSimplex& b) {
    return a.lambdas_ == b.lambdas_;
  }

 private:
  std::vector<BigInt> lambdas_;
  BigInt lcm_;
  std::vector<BigInt> quotients_;
  std::vector<LatticePoint> vertices_;
  LinearForm skew_form_;
};

inline RectSimplex make_simplex(std::vector<BigInt> lambdas) { return RectSimplex(std::move(lambdas)); }

inline BigInt height(const RectSimplex& s, FacetId f, const LatticePoint& z) {
  s.check_facet(f);
  s.check_point(z);
  return f.is_skew() ? s.skew_height(z) : z.coord(f.index());
}

/// Visits every z in the cone over Δ(λ) with z_{n+1} = degree, i.e. z_i >= 0
/// and σ_λ(z) >= 0, in lexicographically ascending order. Stops with a
/// ResourceError once more than `limit` points have been produced.
inline void for_each_point_at_degree(const RectSimplex& s, const BigInt& degree, std::size_t limit,
                                     const std::function<void(const LatticePoint&)>& visit) {
  if (degree < 0) return;
  const std::size_t n = s.dimension();
  const BigInt budget_total = s.lcm() * degree;
  LatticePoint z = LatticePoint::zero(n + 1);
  z[n] = degree;
  std::size_t produced = 0;

  std::function<void(std::size_t, const BigInt&)> rec = [&](std::size_t i, const BigInt& used) {
    if (i == n) {
      if (++produced > limit)
        throw ResourceError("more than " + std::to_string(limit) +
                            " lattice points at degree " + degree.str() + " for lambda; raise the "
                            "generator limit (HOLEFORGE_MAX_GENERATORS) to proceed");
      visit(z);
      return;
    }
    const BigInt& q = s.quotient(i + 1);
    for (BigInt t = 0; used + q * t <= budget_total; ++t) {
      z[i] = t;
      rec(i + 1, used + q * t);
    }
    z[i] = 0;
  };
  rec(0, BigInt(0));
}

inline std::vector<LatticePoint> lattice_points_at_degree(const RectSimplex& s, const BigInt& degree,
                                                          std::size_t limit) {
  std::vector<LatticePoint> out;
  for_each_point_at_degree(s, degree, limit, [&](const LatticePoint& z) { out.push_back(z); });
  return out;
}

/// The points (p, 1) with p ∈ Δ(λ) ∩ Z^n, sorted lexicographically.
inline std::vector<LatticePoint> degree_one_generators(const RectSimplex& s,
                                                       std::size_t limit = default_generator_limit()) {
  return lattice_points_at_degree(s, BigInt(1), limit);
}

}  // namespace holeforge
