#include "sym2chab/dyadic.hpp"

#include <algorithm>
#include <sstream>

namespace sym2chab {

namespace mp = boost::multiprecision;

std::int64_t two_adic_valuation(const BigInt& n) {
  if (n == 0) throw Error("valuation of zero");
  return static_cast<std::int64_t>(mp::lsb(mp::abs(n)));
}

BigInt mod_pow2(const BigInt& n, std::int64_t k) {
  if (k <= 0) return 0;
  BigInt m = BigInt(1) << k;
  BigInt r = n % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod_pow2(const BigInt& odd, std::int64_t k) {
  if (k <= 0) return 0;
  BigInt u = mod_pow2(odd, k);
  if ((u & 1) == 0) throw Error("inverse of an even number modulo a power of two");
  // u*u = 1 (mod 8), so u is its own inverse to 3 bits; each Newton step doubles that.
  BigInt inv = u;
  for (std::int64_t bits = 3; bits < k; bits *= 2) inv = mod_pow2(inv * (2 - u * inv), k);
  return mod_pow2(inv, k);
}

namespace {

constexpr std::int64_t kInf = Dyadic::kInfinity;

}  // namespace

Dyadic Dyadic::zero(std::int64_t abs_precision) { return Dyadic(kInf, 0, abs_precision); }

Dyadic Dyadic::one(std::int64_t abs_precision) { return from_integer(1, abs_precision); }

Dyadic Dyadic::from_integer(const BigInt& n, std::int64_t abs_precision) {
  return from_scaled(n, 0, abs_precision);
}

Dyadic Dyadic::from_scaled(const BigInt& num, std::int64_t exponent, std::int64_t abs_precision) {
  if (num == 0) return zero(abs_precision);
  const std::int64_t shift = two_adic_valuation(num);
  const std::int64_t v = exponent + shift;
  if (v >= abs_precision) return zero(abs_precision);
  return Dyadic(v, mod_pow2(num / (BigInt(1) << shift), abs_precision - v), abs_precision);
}

Dyadic Dyadic::reduced_to(std::int64_t abs) const {
  if (abs >= abs_precision_) return *this;
  if (is_zero_to_precision() || valuation_ >= abs) return zero(abs);
  return Dyadic(valuation_, mod_pow2(unit_, abs - valuation_), abs);
}

BigInt Dyadic::residue(std::int64_t k) const {
  if (k > abs_precision_)
    throw PrecisionExhausted("residue mod 2^" + std::to_string(k) + " requested but only " +
                             std::to_string(abs_precision_) + " digits are known");
  if (is_zero_to_precision()) return 0;
  if (valuation_ < 0) throw Error("residue of a non-integral 2-adic number");
  if (valuation_ >= k) return 0;
  return mod_pow2(unit_ << valuation_, k);
}

BigInt Dyadic::signed_unit() const {
  if (is_zero_to_precision()) return 0;
  const std::int64_t rel = rel_precision();
  BigInt half = BigInt(1) << (rel - 1);
  return unit_ > half ? BigInt(unit_ - (BigInt(1) << rel)) : unit_;
}

Dyadic Dyadic::operator-() const {
  if (is_zero_to_precision()) return *this;
  const std::int64_t rel = rel_precision();
  return Dyadic(valuation_, mod_pow2(-unit_, rel), abs_precision_);
}

Dyadic Dyadic::inverse() const {
  if (is_zero_to_precision()) throw DivisionByZeroToPrecision("inverse of zero to precision");
  return one(rel_precision()) / *this;
}

namespace {

Dyadic add_impl(const Dyadic& x, const Dyadic& y, bool subtract) {
  const std::int64_t abs = std::min(x.abs_precision(), y.abs_precision());
  if (x.is_zero_to_precision() && y.is_zero_to_precision()) return Dyadic::zero(abs);
  const std::int64_t m = std::min(x.valuation(), y.valuation());
  if (m >= abs) return Dyadic::zero(abs);
  BigInt sum = 0;
  if (!x.is_zero_to_precision()) sum += BigInt(x.unit()) << (x.valuation() - m);
  if (!y.is_zero_to_precision()) {
    BigInt t = BigInt(y.unit()) << (y.valuation() - m);
    sum = subtract ? BigInt(sum - t) : BigInt(sum + t);
  }
  return Dyadic::from_scaled(mod_pow2(sum, abs - m), m, abs);
}

}  // namespace

Dyadic operator+(const Dyadic& x, const Dyadic& y) { return add_impl(x, y, false); }
Dyadic operator-(const Dyadic& x, const Dyadic& y) { return add_impl(x, y, true); }

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  if (x.is_zero_to_precision() || y.is_zero_to_precision()) {
    // 0 mod 2^a times something divisible by 2^b is 0 mod 2^(a+b).
    return Dyadic::zero(x.valuation_lower_bound() + y.valuation_lower_bound());
  }
  const std::int64_t v = x.valuation() + y.valuation();
  const std::int64_t rel = std::min(x.rel_precision(), y.rel_precision());
  return Dyadic(v, mod_pow2(x.unit() * y.unit(), rel), v + rel);
}

Dyadic operator/(const Dyadic& x, const Dyadic& y) {
  if (y.is_zero_to_precision())
    throw DivisionByZeroToPrecision("divisor is zero modulo 2^" + std::to_string(y.abs_precision()));
  if (x.is_zero_to_precision()) return Dyadic::zero(x.abs_precision() - y.valuation());
  const std::int64_t v = x.valuation() - y.valuation();
  const std::int64_t rel = std::min(x.rel_precision(), y.rel_precision());
  if (rel <= 0) throw PrecisionExhausted("quotient has no known digits");
  return Dyadic(v, mod_pow2(x.unit() * inverse_mod_pow2(y.unit(), rel), rel), v + rel);
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  if (is_zero_to_precision()) {
    os << "O(2^" << abs_precision_ << ")";
    return os.str();
  }
  if (valuation_ != 0) os << "2^" << valuation_ << "*";
  os << signed_unit() << " + O(2^" << abs_precision_ << ")";
  return os.str();
}

std::string Dyadic::dump() const {
  std::ostringstream os;
  if (is_zero_to_precision())
    os << "(inf, 0)";
  else
    os << "(" << valuation_ << ", " << signed_unit() << ")";
  return os.str();
}

bool congruent(const Dyadic& x, const Dyadic& y, std::int64_t k) {
  if (x.abs_precision() < k || y.abs_precision() < k)
    throw Indistinguishable("congruence mod 2^" + std::to_string(k) + " needs " + std::to_string(k) +
                            " known digits");
  return (x - y).valuation_lower_bound() >= k;
}

bool provably_distinct(const Dyadic& x, const Dyadic& y) {
  const Dyadic d = x - y;
  if (d.is_zero_to_precision())
    throw Indistinguishable("elements agree to all " + std::to_string(d.abs_precision()) +
                            " known digits; equality cannot be certified");
  return true;
}

// ---------------------------------------------------------------------------

QuadDyadic QuadDyadic::zero(std::int64_t abs_precision) {
  return {Dyadic::zero(abs_precision), Dyadic::zero(abs_precision)};
}

QuadDyadic QuadDyadic::one(std::int64_t abs_precision) {
  return {Dyadic::one(abs_precision), Dyadic::zero(abs_precision)};
}

QuadDyadic QuadDyadic::w(std::int64_t abs_precision) {
  return {Dyadic::zero(abs_precision), Dyadic::one(abs_precision)};
}

std::int64_t QuadDyadic::valuation() const { return std::min(a_.valuation(), b_.valuation()); }

std::int64_t QuadDyadic::valuation_lower_bound() const {
  return std::min(a_.valuation_lower_bound(), b_.valuation_lower_bound());
}

std::int64_t QuadDyadic::abs_precision() const {
  return std::min(a_.abs_precision(), b_.abs_precision());
}

QuadDyadic QuadDyadic::conj() const { return {a_ - b_, -b_}; }

Dyadic QuadDyadic::norm() const {
  // (a + bw)(a - b - bw) = a^2 - ab + b^2
  return a_ * a_ - a_ * b_ + b_ * b_;
}

Dyadic QuadDyadic::trace() const {
  // w + conj(w) = -1
  return a_ + a_ - b_;
}

unsigned QuadDyadic::residue_bits() const {
  return static_cast<unsigned>(a_.parity()) | (static_cast<unsigned>(b_.parity()) << 1);
}

QuadDyadic QuadDyadic::inverse() const { return conj() / norm(); }

QuadDyadic operator+(const QuadDyadic& x, const QuadDyadic& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
QuadDyadic operator-(const QuadDyadic& x, const QuadDyadic& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }

QuadDyadic operator*(const QuadDyadic& x, const QuadDyadic& y) {
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1 - w
  const Dyadic bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

QuadDyadic operator/(const QuadDyadic& x, const QuadDyadic& y) {
  const Dyadic n = y.norm();
  if (n.is_zero_to_precision())
    throw DivisionByZeroToPrecision("divisor in Q_4 is zero to precision");
  return (x * y.conj()) / n;
}

std::string QuadDyadic::to_string() const { return "[" + a_.to_string() + "] + [" + b_.to_string() + "]w"; }

std::string QuadDyadic::dump() const { return a_.dump() + " + " + b_.dump() + "w"; }

bool congruent(const QuadDyadic& x, const QuadDyadic& y, std::int64_t k) {
  return congruent(x.a(), y.a(), k) && congruent(x.b(), y.b(), k);
}

std::string HalfVal::to_string() const {
  return denominator() == 1 ? std::to_string(numerator())
                            : std::to_string(numerator()) + "/2";
}

QuadDyadic hensel_artin_schreier(const Dyadic& c, std::int64_t N) {
  if (N <= 0) throw PrecisionExhausted("Hensel lift needs a positive precision");
  if (c.abs_precision() < N)
    throw PrecisionExhausted("constant known to " + std::to_string(c.abs_precision()) +
                             " digits, " + std::to_string(N) + " requested");
  if (!c.is_zero_to_precision() && c.valuation() < 0)
    throw Error("Artin-Schreier constant must be a 2-adic integer");
  const Dyadic cN = c.reduced_to(N);
  const QuadDyadic cq(cN);
  QuadDyadic gamma = cN.parity() == 1 ? QuadDyadic::w(N) : QuadDyadic::zero(N);
  const Dyadic two = Dyadic::from_integer(2, N);
  // Quadratic convergence: 2 + log2(N) steps suffice; the cap catches precision bugs.
  for (int step = 0; step < 128; ++step) {
    const QuadDyadic residual = gamma * gamma + gamma - cq;
    if (residual.valuation_lower_bound() >= N) return gamma;
    const QuadDyadic derivative = gamma * two + QuadDyadic::one(N);
    gamma = gamma - residual / derivative;
    gamma = QuadDyadic(gamma.a().reduced_to(N), gamma.b().reduced_to(N));
  }
  throw PrecisionExhausted("Hensel lift did not reach " + std::to_string(N) + " digits");
}

}  // namespace sym2chab
