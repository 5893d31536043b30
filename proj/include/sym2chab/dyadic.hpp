#pragma once

// Fixed-precision arithmetic in Q_2 and in Q_4 = Q_2(w), w^2 + w + 1 = 0.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sym2chab/errors.hpp"

namespace sym2chab {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kDefaultPrecision = 32;

/// 2-adic valuation of a nonzero integer.
std::int64_t two_adic_valuation(const BigInt& n);

/// n mod 2^k as a representative in [0, 2^k).
BigInt mod_pow2(const BigInt& n, std::int64_t k);

/// Inverse of an odd integer modulo 2^k.
BigInt inverse_mod_pow2(const BigInt& odd, std::int64_t k);

/// An element of Q_2 known modulo 2^abs_precision.
///
/// Stored as 2^valuation * unit with unit odd and reduced modulo 2^(abs - valuation).
/// Anything congruent to 0 modulo 2^abs_precision is the zero of that precision and has
/// valuation kInfinity; there is no other representation of zero.
class Dyadic {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

  static Dyadic zero(std::int64_t abs_precision = kDefaultPrecision);
  static Dyadic one(std::int64_t abs_precision = kDefaultPrecision);
  static Dyadic from_integer(const BigInt& n, std::int64_t abs_precision = kDefaultPrecision);
  /// num * 2^exponent, known modulo 2^abs_precision.
  static Dyadic from_scaled(const BigInt& num, std::int64_t exponent,
                            std::int64_t abs_precision = kDefaultPrecision);

  bool is_zero_to_precision() const { return valuation_ == kInfinity; }
  bool is_unit() const { return valuation_ == 0; }
  /// kInfinity when the element is zero to precision.
  std::int64_t valuation() const { return valuation_; }
  /// Exact valuation, or the absolute precision for a zero (the value is divisible by that).
  std::int64_t valuation_lower_bound() const {
    return is_zero_to_precision() ? abs_precision_ : valuation_;
  }
  const BigInt& unit() const { return unit_; }
  std::int64_t abs_precision() const { return abs_precision_; }
  std::int64_t rel_precision() const {
    return is_zero_to_precision() ? 0 : abs_precision_ - valuation_;
  }

  /// Drops digits so that the result is known modulo 2^abs (never adds precision).
  Dyadic reduced_to(std::int64_t abs) const;

  /// Value modulo 2^k in [0, 2^k). Requires a 2-adic integer known to at least k digits.
  BigInt residue(std::int64_t k) const;
  int parity() const { return static_cast<int>(residue(1)); }

  /// Representative in (-2^(rel-1), 2^(rel-1)] times the power of two; exact rational form.
  BigInt signed_unit() const;

  Dyadic operator-() const;
  Dyadic inverse() const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator/(const Dyadic& x, const Dyadic& y);
  Dyadic& operator+=(const Dyadic& y) { return *this = *this + y; }
  Dyadic& operator-=(const Dyadic& y) { return *this = *this - y; }
  Dyadic& operator*=(const Dyadic& y) { return *this = *this * y; }
  Dyadic& operator/=(const Dyadic& y) { return *this = *this / y; }

  /// "2^v * u + O(2^N)" style rendering.
  std::string to_string() const;
  /// Compact "(valuation, unit)" form used by series dumps.
  std::string dump() const;

 private:
  Dyadic(std::int64_t valuation, BigInt unit, std::int64_t abs_precision)
      : valuation_(valuation), unit_(std::move(unit)), abs_precision_(abs_precision) {}

  std::int64_t valuation_;
  BigInt unit_;
  std::int64_t abs_precision_;
};

/// Decides x == y (mod 2^k). Throws Indistinguishable if either side is not known to k digits.
bool congruent(const Dyadic& x, const Dyadic& y, std::int64_t k);

/// Ordering is undefined on Q_2; this only decides equality, and refuses to certify it:
/// returns false when x - y has a known finite valuation, throws Indistinguishable otherwise.
bool provably_distinct(const Dyadic& x, const Dyadic& y);

/// a + b*w in Z_2[w]/(w^2 + w + 1), the ring of integers of Q_4 tensored with Q_2.
class QuadDyadic {
 public:
  QuadDyadic(Dyadic a, Dyadic b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit QuadDyadic(Dyadic a) : a_(a), b_(Dyadic::zero(a.abs_precision())) {}

  static QuadDyadic zero(std::int64_t abs_precision = kDefaultPrecision);
  static QuadDyadic one(std::int64_t abs_precision = kDefaultPrecision);
  static QuadDyadic w(std::int64_t abs_precision = kDefaultPrecision);

  const Dyadic& a() const { return a_; }
  const Dyadic& b() const { return b_; }

  bool is_zero_to_precision() const {
    return a_.is_zero_to_precision() && b_.is_zero_to_precision();
  }
  /// Q_4/Q_2 is unramified with integral basis {1, w}, so v(a + bw) = min(v(a), v(b)).
  std::int64_t valuation() const;
  std::int64_t valuation_lower_bound() const;
  std::int64_t abs_precision() const;
  bool is_unit() const { return valuation() == 0; }

  /// w -> -1 - w.
  QuadDyadic conj() const;
  Dyadic norm() const;
  Dyadic trace() const;

  /// Reduction modulo 2 as the 2-bit code (a mod 2) | (b mod 2) << 1, i.e. w -> alpha in F_4.
  unsigned residue_bits() const;

  QuadDyadic operator-() const { return {-a_, -b_}; }
  QuadDyadic inverse() const;

  friend QuadDyadic operator+(const QuadDyadic& x, const QuadDyadic& y);
  friend QuadDyadic operator-(const QuadDyadic& x, const QuadDyadic& y);
  friend QuadDyadic operator*(const QuadDyadic& x, const QuadDyadic& y);
  friend QuadDyadic operator/(const QuadDyadic& x, const QuadDyadic& y);
  friend QuadDyadic operator*(const QuadDyadic& x, const Dyadic& c) { return {x.a_ * c, x.b_ * c}; }
  friend QuadDyadic operator*(const Dyadic& c, const QuadDyadic& x) { return x * c; }
  friend QuadDyadic operator/(const QuadDyadic& x, const Dyadic& c) { return {x.a_ / c, x.b_ / c}; }
  QuadDyadic& operator+=(const QuadDyadic& y) { return *this = *this + y; }
  QuadDyadic& operator-=(const QuadDyadic& y) { return *this = *this - y; }
  QuadDyadic& operator*=(const QuadDyadic& y) { return *this = *this * y; }

  std::string to_string() const;
  std::string dump() const;

 private:
  Dyadic a_;
  Dyadic b_;
};

bool congruent(const QuadDyadic& x, const QuadDyadic& y, std::int64_t k);

/// Valuation lower bound taking half-integer values (numerator / denominator, denominator 1 or 2).
/// Only ever used as a bound; ramified elements are never materialized.
class HalfVal {
 public:
  constexpr HalfVal() = default;
  constexpr HalfVal(std::int64_t numerator, std::int64_t denominator = 1)
      : twice_(denominator == 2 ? numerator : 2 * numerator) {
    if (denominator != 1 && denominator != 2) throw Error("HalfVal denominator must be 1 or 2");
  }
  static constexpr HalfVal from_halves(std::int64_t halves) {
    HalfVal h;
    h.twice_ = halves;
    return h;
  }

  constexpr std::int64_t halves() const { return twice_; }
  constexpr std::int64_t numerator() const { return twice_ % 2 == 0 ? twice_ / 2 : twice_; }
  constexpr std::int64_t denominator() const { return twice_ % 2 == 0 ? 1 : 2; }

  friend constexpr HalfVal operator+(HalfVal x, HalfVal y) { return from_halves(x.twice_ + y.twice_); }
  friend constexpr HalfVal operator-(HalfVal x, HalfVal y) { return from_halves(x.twice_ - y.twice_); }
  friend constexpr HalfVal operator*(std::int64_t k, HalfVal x) { return from_halves(k * x.twice_); }
  friend constexpr auto operator<=>(HalfVal, HalfVal) = default;

  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

/// Solves gamma^2 + gamma = c to absolute precision 2^N by Newton iteration in Z_2[w].
/// gamma = w (mod 2) when c is odd and gamma = 0 (mod 2) when c is even.
QuadDyadic hensel_artin_schreier(const Dyadic& c, std::int64_t N = kDefaultPrecision);

}  // namespace sym2chab
