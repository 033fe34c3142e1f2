/**
 * Membership in Q(λ) and its saturation, reduction modulo v_1..v_n, and hole
 * enumeration.
 *
 * Q(λ) is generated by the degree-1 lattice points of Δ(λ). Since Z Q(λ) =
 * Z^{n+1}, the saturation is Z^{n+1} ∩ cone(Δ(λ)): all z with z_i >= 0,
 * z_{n+1} >= 0 and σ_λ(z) >= 0. A hole is a point of the saturation that is
 * not a sum of generators.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "holeforge/lattice_core.hpp"
#include "holeforge/rect_simplex.hpp"

namespace holeforge {

inline bool in_saturation(const RectSimplex& s, const LatticePoint& z) {
  s.check_point(z);
  for (const auto& c : z.coords())
    if (c < 0) return false;
  return s.skew_height(z) >= 0;
}

/// Degree-1 generators summing to the queried point, in the order they were
/// picked. Empty for the origin.
struct MembershipWitness {
  std::vector<LatticePoint> summands;

  LatticePoint sum(std::size_t length) const {
    auto acc = LatticePoint::zero(length);
    for (const auto& g : summands) acc += g;
    return acc;
  }
  friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

namespace detail {

inline std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() / 4 ||
      v < std::numeric_limits<std::int64_t>::min() / 4)
    throw ResourceError(std::string(what) + " " + v.str() + " exceeds the 64-bit fast path");
  return v.convert_to<std::int64_t>();
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace detail

/**
 * Exact membership oracle for Q(λ).
 *
 * Decides z ∈ Q(λ) by memoized depth-first decomposition: z is a member iff
 * some generator g <= z (coordinatewise) leaves a remainder z - g in Q(λ).
 * Generators are tried in lexicographically descending order and the first
 * decomposition found is returned, so witnesses are deterministic.
 *
 * Internally works on 64-bit coordinates; the generator guard keeps λ small
 * enough for that. Not safe for concurrent use (owns a memo table).
 */
class SemigroupOracle {
 public:
  struct Limits {
    std::size_t max_generators = default_generator_limit();
    std::int64_t max_degree = 64;
  };

  explicit SemigroupOracle(RectSimplex s) : SemigroupOracle(std::move(s), Limits{}) {}
  SemigroupOracle(RectSimplex s, Limits limits) : simplex_(std::move(s)), limits_(limits) {
    n_ = simplex_.dimension();
    lcm_ = detail::to_int64(simplex_.lcm(), "lcm(lambda)");
    for (std::size_t i = 1; i <= n_; ++i)
      quotients_.push_back(detail::to_int64(simplex_.quotient(i), "L/lambda_i"));

    generators_ = degree_one_generators(simplex_, limits_.max_generators);
    desc_.reserve(generators_.size() * (n_ + 1));
    for (auto it = generators_.rbegin(); it != generators_.rend(); ++it) {
      Key g = to_key(*it);
      desc_.insert(desc_.end(), g.begin(), g.end());
      desc_skew_.push_back(skew(g));
      generator_set_.insert(std::move(g));
    }
  }

  const RectSimplex& simplex() const noexcept { return simplex_; }
  /// Degree-1 generators, lexicographically ascending.
  const std::vector<LatticePoint>& generators() const noexcept { return generators_; }

  bool is_generator(const LatticePoint& z) const {
    simplex_.check_point(z);
    if (z.degree() != 1) return false;
    for (const auto& c : z.coords())
      if (c < 0) return false;
    try {
      return generator_set_.contains(to_key(z));
    } catch (const ResourceError&) {
      return false;
    }
  }

  std::optional<MembershipWitness> member(const LatticePoint& z) {
    if (!in_saturation(simplex_, z)) return std::nullopt;
    if (z.degree() == 0) return MembershipWitness{};  // saturation forces z = 0
    if (z.degree() > limits_.max_degree)
      throw ResourceError("degree " + z.degree().str() + " exceeds the oracle limit " +
                          std::to_string(limits_.max_degree));
    Key key = to_key(z);
    if (!decomposable(key, skew(key))) return std::nullopt;

    MembershipWitness w;
    while (key[n_] > 1) {
      const std::int32_t j = memo_.at(key);
      const std::int64_t* g = &desc_[static_cast<std::size_t>(j) * (n_ + 1)];
      w.summands.push_back(from_key(Key(g, g + n_ + 1)));
      for (std::size_t k = 0; k <= n_; ++k) key[k] -= g[k];
    }
    w.summands.push_back(from_key(key));
    return w;
  }

  bool contains(const LatticePoint& z) { return member(z).has_value(); }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  using Key = std::vector<std::int64_t>;

  Key to_key(const LatticePoint& z) const {
    Key k(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) k[i] = detail::to_int64(z[i], "coordinate");
    return k;
  }
  static LatticePoint from_key(const Key& k) {
    std::vector<BigInt> c(k.begin(), k.end());
    return LatticePoint(std::move(c));
  }

  __int128 skew(const Key& z) const {
    __int128 acc = static_cast<__int128>(lcm_) * z[n_];
    for (std::size_t i = 0; i < n_; ++i) acc -= static_cast<__int128>(quotients_[i]) * z[i];
    return acc;
  }

  // z is in the saturation with degree >= 1.
  bool decomposable(const Key& z, __int128 z_skew) {
    if (z[n_] == 1) return generator_set_.contains(z);
    if (auto it = memo_.find(z); it != memo_.end()) return it->second >= 0;

    const std::size_t width = n_ + 1;
    const std::size_t count = desc_skew_.size();
    Key rest(width);
    std::int32_t found = -1;
    for (std::size_t j = 0; j < count && found < 0; ++j) {
      const std::int64_t* g = &desc_[j * width];
      bool fits = true;
      for (std::size_t k = 0; k < n_; ++k)
        if (g[k] > z[k]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      const __int128 rest_skew = z_skew - desc_skew_[j];
      if (rest_skew < 0) continue;
      for (std::size_t k = 0; k < width; ++k) rest[k] = z[k] - g[k];
      const bool ok = rest[n_] == 1 ? generator_set_.contains(rest) : decomposable(rest, rest_skew);
      if (ok) found = static_cast<std::int32_t>(j);
    }
    memo_.emplace(z, found);
    return found >= 0;
  }

  RectSimplex simplex_;
  Limits limits_;
  std::size_t n_ = 0;
  std::int64_t lcm_ = 0;
  std::vector<std::int64_t> quotients_;
  std::vector<LatticePoint> generators_;
  std::vector<std::int64_t> desc_;  // generators, descending lex, flattened
  std::vector<__int128> desc_skew_;
  std::unordered_set<Key, detail::KeyHash> generator_set_;
  std::unordered_map<Key, std::int32_t, detail::KeyHash> memo_;
};

/// Guard for the brute-force reference oracle.
struct NaiveLimits {
  std::int64_t max_degree = 5;
  std::size_t max_generators = 1000;
};

/**
 * Reference oracle: tries every multiset of degree(z) generators
 * (non-decreasing index sequences), pruning partial sums that leave the box
 * [0, z]. Shares nothing with SemigroupOracle beyond the generator list.
 */
inline bool naive_member(const RectSimplex& s, const LatticePoint& z, NaiveLimits limits = {}) {
  s.check_point(z);
  const std::size_t n = s.dimension();
  if (z.degree() < 0) return false;
  if (z.degree() > limits.max_degree)
    throw ResourceError("naive_member: degree " + z.degree().str() + " above guard " +
                        std::to_string(limits.max_degree));
  const auto gens = degree_one_generators(s, limits.max_generators);
  if (z.degree() == 0) return z.is_zero();
  for (std::size_t k = 0; k < n; ++k)
    if (z[k] < 0) return false;

  std::vector<std::int64_t> target(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = detail::to_int64(z[k], "coordinate");
  // Only generators inside the box can take part.
  std::vector<std::vector<std::int64_t>> cands;
  for (const auto& g : gens) {
    std::vector<std::int64_t> c(n);
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) {
      c[k] = g[k].convert_to<std::int64_t>();
      inside = c[k] <= target[k];
    }
    if (inside) cands.push_back(std::move(c));
  }

  const auto parts = z.degree().convert_to<int>();
  std::vector<std::int64_t> residual = target;
  auto rec = [&](auto&& self, std::size_t start, int left) -> bool {
    if (left == 0)
      return std::all_of(residual.begin(), residual.end(), [](auto v) { return v == 0; });
    for (std::size_t j = start; j < cands.size(); ++j) {
      const auto& g = cands[j];
      bool fits = true;
      for (std::size_t k = 0; k < n && fits; ++k) fits = g[k] <= residual[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < n; ++k) residual[k] -= g[k];
      const bool ok = self(self, j, left - 1);
      for (std::size_t k = 0; k < n; ++k) residual[k] += g[k];
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0, parts);
}

/// Subtracts floor(z_i/λ_i) v_i for every i, landing in the box 0 <= σ_i < λ_i.
/// σ_λ is unchanged because every v_i lies on F_λ.
inline LatticePoint reduce(const RectSimplex& s, const LatticePoint& z) {
  if (!in_saturation(s, z)) throw ArgumentError("reduce: " + z.str() + " is not in the saturation");
  LatticePoint r = z;
  for (std::size_t i = 1; i <= s.dimension(); ++i) {
    BigInt c = z.coord(i) / s.lambda(i);
    if (c != 0) r -= c * s.vertex(i);
  }
  return r;
}

inline void require_pairwise_coprime(const RectSimplex& s, const char* who) {
  if (!pairwise_coprime(s.lambdas()))
    throw PreconditionError(std::string(who) + ": lambda entries must be pairwise coprime");
}

/**
 * The unique z with σ_λ(z) = h and 0 <= σ_i(z) < λ_i for all i.
 *
 * For pairwise coprime λ the kernel of σ_λ is spanned by v_1..v_n, so any
 * integral solution of σ_λ(z) = h reduces to exactly one such box point.
 */
inline LatticePoint unique_reduced_element(const RectSimplex& s, const BigInt& h) {
  require_pairwise_coprime(s, "unique_reduced_element");
  if (h < 1) throw ArgumentError("unique_reduced_element: skew height must be >= 1");
  const auto& a = s.skew_form().coeffs();

  // Chain extended gcds: Σ a_j x_j = g.
  std::vector<BigInt> x{BigInt(1)};
  BigInt g = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) {
    auto e = extended_gcd(g, a[j]);
    for (auto& v : x) v *= e.x;
    x.push_back(e.y);
    g = e.g;
  }
  if (g < 0) {
    g = -g;
    for (auto& v : x) v = -v;
  }
  if (g == 0 || h % g != 0)
    throw ArithmeticError("skew form coefficients have gcd " + g.str() + ", no solution for h = " +
                          h.str());
  LatticePoint z(std::move(x));
  z *= h / g;
  for (std::size_t i = 1; i <= s.dimension(); ++i) {
    BigInt c = floor_div(z.coord(i), s.lambda(i));
    if (c != 0) z -= c * s.vertex(i);
  }
  if (s.skew_height(z) != h || z.degree() < 1)
    throw ArithmeticError("reduced solution " + z.str() + " fails its invariants");
  return z;
}

struct HoleRecord {
  LatticePoint point;
  std::map<FacetId, BigInt> heights;
  bool reduced = false;

  const BigInt& skew_height() const { return heights.at(FacetId::skew()); }
  friend bool operator==(const HoleRecord&, const HoleRecord&) = default;
};

inline HoleRecord make_hole_record(const RectSimplex& s, const LatticePoint& z) {
  HoleRecord r{z, {}, true};
  for (auto f : s.facets()) {
    r.heights.emplace(f, height(s, f, z));
    if (!f.is_skew() && z.coord(f.index()) >= s.lambda(f.index())) r.reduced = false;
  }
  return r;
}

/// Reduced holes with skew height in [1, max_skew_height]. Nothing is
/// claimed about larger skew heights.
struct HoleEnumeration {
  std::vector<HoleRecord> holes;
  BigInt max_skew_height;
};

/**
 * Tests the unique reduced candidate at every skew height 1..max_skew_height.
 * Every hole reduces (by subtracting vertices) to a reduced hole of the same
 * skew height, so this lists one representative per hole-bearing height.
 * `threads` > 1 splits heights across workers, each with its own oracle.
 */
inline HoleEnumeration enumerate_holes(const RectSimplex& s, const BigInt& max_skew_height,
                                       unsigned threads = 1,
                                       SemigroupOracle::Limits limits = {}) {
  require_pairwise_coprime(s, "enumerate_holes");
  if (max_skew_height < 1) throw ArgumentError("enumerate_holes: max_skew_height must be >= 1");
  const auto bound = detail::to_int64(max_skew_height, "max_skew_height");
  threads = std::max(1u, threads);

  std::vector<std::vector<HoleRecord>> found(threads);
  auto work = [&](unsigned w) {
    SemigroupOracle oracle(s, limits);
    for (std::int64_t h = 1 + w; h <= bound; h += threads) {
      auto z = unique_reduced_element(s, BigInt(h));
      if (!oracle.contains(z)) found[w].push_back(make_hole_record(s, z));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  HoleEnumeration out{{}, max_skew_height};
  for (auto& part : found)
    for (auto& r : part) out.holes.push_back(std::move(r));
  std::sort(out.holes.begin(), out.holes.end(), [](const HoleRecord& a, const HoleRecord& b) {
    return a.skew_height() < b.skew_height();
  });
  return out;
}

/// Holes of degree <= max_degree lying on some facet (some height zero).
inline std::vector<LatticePoint> boundary_hole_scan(const RectSimplex& s, const BigInt& max_degree,
                                                    SemigroupOracle::Limits limits = {}) {
  if (max_degree < 1) throw ArgumentError("boundary_hole_scan: max_degree must be >= 1");
  SemigroupOracle oracle(s, limits);
  std::vector<LatticePoint> holes;
  const std::size_t point_limit = limits.max_generators * 64;
  for (BigInt d = 0; d <= max_degree; ++d) {
    for_each_point_at_degree(s, d, point_limit, [&](const LatticePoint& z) {
      bool on_boundary = s.skew_height(z) == 0;
      for (std::size_t i = 1; i <= s.dimension() && !on_boundary; ++i) on_boundary = z.coord(i) == 0;
      if (on_boundary && !oracle.contains(z)) holes.push_back(z);
    });
  }
  return holes;
}

/**
 * Degree-2 membership without a generator list (pairwise coprime λ).
 *
 * A degree-1 point of the saturation with σ_λ = 0 is a vertex v_1..v_n; with
 * σ_λ = h >= 1 it can only be the reduced element of height h, and only when
 * that element has degree 1. So z = g_1 + g_2 has at most
 * n + floor(σ_λ(z)/2) candidate splits. Works for λ far too large to list
 * generators, e.g. after lifting.
 */
inline std::optional<MembershipWitness> degree_two_member(const RectSimplex& s, const LatticePoint& z,
                                                          const BigInt& max_skew_height = 10'000'000) {
  require_pairwise_coprime(s, "degree_two_member");
  s.check_point(z);
  if (z.degree() != 2) throw ArgumentError("degree_two_member: point must have degree 2");
  if (!in_saturation(s, z)) return std::nullopt;
  const BigInt sigma = s.skew_height(z);
  if (sigma > max_skew_height)
    throw ResourceError("degree_two_member: skew height " + sigma.str() + " above limit");

  auto try_split = [&](const LatticePoint& g) -> std::optional<MembershipWitness> {
    LatticePoint rest = z - g;
    if (rest.degree() == 1 && in_saturation(s, rest)) {
      MembershipWitness w{{g, rest}};
      std::sort(w.summands.begin(), w.summands.end(), std::greater<>());
      return w;
    }
    return std::nullopt;
  };
  for (std::size_t i = 1; i <= s.dimension(); ++i)
    if (auto w = try_split(s.vertex(i))) return w;
  for (BigInt h = 1; 2 * h <= sigma; ++h) {
    auto u = unique_reduced_element(s, h);
    if (u.degree() != 1) continue;
    if (auto w = try_split(u)) return w;
  }
  return std::nullopt;
}

}  // namespace holeforge
