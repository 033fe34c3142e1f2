/**
 * Exact integer vectors and linear forms on Z^{n+1}.
 *
 * A LatticePoint stores n+1 arbitrary-precision coordinates; the last one is
 * the degree. Everything here is exact: no floating point, no overflow.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holeforge/errors.hpp"

namespace holeforge {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Floor division, rounding toward negative infinity (cpp_int truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ArithmeticError("floor_div by zero");
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative remainder in [0, |b|).
inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
  return a - floor_div(a, b) * b;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt r = boost::multiprecision::abs(a / gcd(a, b) * b);
  return r;
}

struct ExtendedGcd {
  BigInt g;  // >= 0
  BigInt x;
  BigInt y;  // a*x + b*y == g
};

inline ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Least common multiple of a non-empty list of positive integers.
inline BigInt lcm_all(std::span<const BigInt> values) {
  if (values.empty()) throw ArgumentError("lcm_all: empty input");
  BigInt acc = 1;
  for (const auto& v : values) {
    if (v < 1) throw ArgumentError("lcm_all: nonpositive value " + v.str());
    acc = lcm(acc, v);
  }
  return acc;
}

inline bool pairwise_coprime(std::span<const BigInt> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (gcd(values[i], values[j]) != 1) return false;
  return true;
}

/// Integer vector in Z^{n+1}; the last coordinate is the degree.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<BigInt> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t length) {
    return LatticePoint(std::vector<BigInt>(length, BigInt(0)));
  }

  /// e_i for 1 <= i <= length (1-based, as in the math).
  static LatticePoint unit(std::size_t length, std::size_t i) {
    if (i < 1 || i > length) throw ArgumentError("unit vector index out of range");
    auto z = zero(length);
    z.coords_[i - 1] = 1;
    return z;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  /// n, the number of non-degree coordinates.
  std::size_t dimension() const noexcept { return coords_.empty() ? 0 : coords_.size() - 1; }
  const BigInt& degree() const { return coords_.back(); }

  /// 0-based access.
  const BigInt& operator[](std::size_t k) const { return coords_[k]; }
  BigInt& operator[](std::size_t k) { return coords_[k]; }
  /// 1-based access matching σ_i(z) = z_i.
  const BigInt& coord(std::size_t i) const { return coords_.at(i - 1); }

  const std::vector<BigInt>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    check_same(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check_same(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  LatticePoint& operator*=(const BigInt& c) {
    for (auto& v : coords_) v *= c;
    return *this;
  }

  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(const BigInt& c, LatticePoint a) { return a *= c; }
  friend LatticePoint operator-(LatticePoint a) {
    for (auto& v : a.coords_) v = -v;
    return a;
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  /// Lexicographic on coordinates.
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }
  friend bool operator>(const LatticePoint& a, const LatticePoint& b) { return b < a; }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& z) {
    os << '(';
    for (std::size_t k = 0; k < z.coords_.size(); ++k) {
      if (k) os << ',';
      os << z.coords_[k];
    }
    return os << ')';
  }

 private:
  void check_same(const LatticePoint& o) const {
    if (o.size() != size()) throw DimensionError("lattice point length mismatch");
  }

  std::vector<BigInt> coords_;
};

/// Integer linear form on Z^{n+1}.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
  LinearForm(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline BigInt dot(const LinearForm& form, const LatticePoint& z) {
  if (form.size() != z.size())
    throw DimensionError("dot: form has length " + std::to_string(form.size()) +
                         ", point has length " + std::to_string(z.size()));
  BigInt acc = 0;
  for (std::size_t k = 0; k < z.size(); ++k) acc += form[k] * z[k];
  return acc;
}

/// δ = (-1, 2, -1, 0), the direction along which good-triple ladders climb.
inline LatticePoint delta(std::size_t n) {
  if (n != 3) throw DimensionError("delta is defined for n = 3 only, got n = " + std::to_string(n));
  return LatticePoint{-1, 2, -1, 0};
}

/// Parses a signed decimal integer. Leading '+' and whitespace are rejected.
inline std::optional<BigInt> parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t k = start; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') return std::nullopt;
  return BigInt(text);
}

}  // namespace holeforge
