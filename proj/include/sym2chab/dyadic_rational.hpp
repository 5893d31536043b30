#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sym2chab/dyadic.hpp"

namespace sym2chab {

/// Exact m / 2^k in lowest terms: k >= 0 and either k == 0 or m is odd. Zero is 0 / 2^0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(const BigInt& integer) : numerator_(integer) {}  // NOLINT: implicit on purpose
  DyadicRational(long long integer) : numerator_(integer) {}      // NOLINT
  DyadicRational(const BigInt& numerator, std::int64_t exponent);

  /// 2^e for any integer e.
  static DyadicRational power_of_two(std::int64_t e);

  const BigInt& numerator() const { return numerator_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return numerator_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return numerator_ < 0 ? -1 : (numerator_ > 0 ? 1 : 0); }
  /// 2-adic valuation (numerator valuation minus k). Zero has none.
  std::int64_t valuation() const;

  /// Value as a fixed-precision 2-adic number known modulo 2^abs_precision.
  Dyadic to_dyadic(std::int64_t abs_precision = kDefaultPrecision) const;
  double to_double() const;

  friend DyadicRational operator+(const DyadicRational& x, const DyadicRational& y);
  friend DyadicRational operator-(const DyadicRational& x, const DyadicRational& y);
  friend DyadicRational operator*(const DyadicRational& x, const DyadicRational& y);
  DyadicRational operator-() const { return DyadicRational(-numerator_, exponent_); }
  DyadicRational& operator+=(const DyadicRational& y) { return *this = *this + y; }
  DyadicRational& operator*=(const DyadicRational& y) { return *this = *this * y; }
  /// Multiplies by 2^e.
  DyadicRational shifted(std::int64_t e) const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& x, const DyadicRational& y);

  /// "m/2^k", or "m" when k == 0.
  std::string to_string() const;
  /// "2^e", "-2^e" or "m*2^e" with m odd.
  std::string to_exponent_string() const;

 private:
  BigInt numerator_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace sym2chab
