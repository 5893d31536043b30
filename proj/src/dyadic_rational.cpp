#include "sym2chab/dyadic_rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sym2chab {

DyadicRational::DyadicRational(const BigInt& numerator, std::int64_t exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const std::int64_t v = two_adic_valuation(numerator_);
  const std::int64_t drop = std::min(v, exponent_);
  if (drop > 0) {
    numerator_ /= BigInt(1) << drop;
    exponent_ -= drop;
  }
  if (exponent_ < 0) {
    numerator_ <<= -exponent_;
    exponent_ = 0;
  }
}

DyadicRational DyadicRational::power_of_two(std::int64_t e) {
  return e >= 0 ? DyadicRational(BigInt(1) << e, 0) : DyadicRational(1, -e);
}

std::int64_t DyadicRational::valuation() const {
  if (is_zero()) throw Error("valuation of zero");
  return two_adic_valuation(numerator_) - exponent_;
}

Dyadic DyadicRational::to_dyadic(std::int64_t abs_precision) const {
  return Dyadic::from_scaled(numerator_, -exponent_, abs_precision);
}

double DyadicRational::to_double() const {
  // ldexp keeps tiny densities such as 2^-93 representable.
  const auto bits = is_zero() ? 0 : static_cast<std::int64_t>(boost::multiprecision::msb(boost::multiprecision::abs(numerator_)));
  const std::int64_t keep = std::max<std::int64_t>(0, bits - 60);
  const double head = static_cast<double>(BigInt(numerator_ / (BigInt(1) << keep)));
  return std::ldexp(head, static_cast<int>(keep - exponent_));
}

DyadicRational operator+(const DyadicRational& x, const DyadicRational& y) {
  const std::int64_t k = std::max(x.exponent_, y.exponent_);
  return DyadicRational((x.numerator_ << (k - x.exponent_)) + (y.numerator_ << (k - y.exponent_)), k);
}

DyadicRational operator-(const DyadicRational& x, const DyadicRational& y) { return x + (-y); }

DyadicRational operator*(const DyadicRational& x, const DyadicRational& y) {
  return DyadicRational(x.numerator_ * y.numerator_, x.exponent_ + y.exponent_);
}

DyadicRational DyadicRational::shifted(std::int64_t e) const {
  return DyadicRational(numerator_, exponent_ - e);
}

std::strong_ordering operator<=>(const DyadicRational& x, const DyadicRational& y) {
  const std::int64_t k = std::max(x.exponent_, y.exponent_);
  const BigInt a = x.numerator_ << (k - x.exponent_);
  const BigInt b = y.numerator_ << (k - y.exponent_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicRational::to_string() const {
  std::ostringstream os;
  os << numerator_;
  if (exponent_ != 0) os << "/2^" << exponent_;
  return os.str();
}

std::string DyadicRational::to_exponent_string() const {
  if (is_zero()) return "0";
  const std::int64_t v = two_adic_valuation(numerator_);
  const BigInt odd = numerator_ / (BigInt(1) << v);
  const std::int64_t e = v - exponent_;
  std::ostringstream os;
  if (odd == 1)
    os << "2^" << e;
  else if (odd == -1)
    os << "-2^" << e;
  else
    os << odd << "*2^" << e;
  return os.str();
}

}  // namespace sym2chab
