#pragma once

// Truncated power series over Dyadic / QuadDyadic, formal antiderivatives that keep the
// 1/(i+1) denominators separate, and the local expansions of the curve.

#include <cstdint>
#include <string>
#include <vector>

#include "sym2chab/curves.hpp"
#include "sym2chab/dyadic.hpp"
#include "sym2chab/modp.hpp"

namespace sym2chab {

/// sum_{i=0}^{T} c_i u^i + O(u^{T+1}).
template <class C>
class TruncSeries {
 public:
  TruncSeries(std::vector<C> coeffs, char var = 't') : coeffs_(std::move(coeffs)), var_(var) {
    if (coeffs_.empty()) throw DimensionMismatch("a truncated series needs at least one coefficient");
  }

  static TruncSeries zero(int order, std::int64_t prec, char var = 't') {
    return TruncSeries(std::vector<C>(static_cast<std::size_t>(order + 1), C::zero(prec)), var);
  }
  static TruncSeries constant(const C& c, int order, char var = 't') {
    auto s = zero(order, c.abs_precision(), var);
    s.coeffs_[0] = c;
    return s;
  }
  /// The series u itself.
  static TruncSeries variable(int order, std::int64_t prec, char var = 't') {
    auto s = zero(order, prec, var);
    if (order >= 1) s.coeffs_[1] = C::one(prec);
    return s;
  }

  /// T: the series is known modulo u^{T+1}.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  char variable_name() const { return var_; }
  const C& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  C& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  TruncSeries truncated(int order) const {
    if (order >= this->order()) return *this;
    return TruncSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1), var_);
  }

  /// Smallest valuation lower bound among the known coefficients.
  std::int64_t min_valuation() const {
    std::int64_t v = coeffs_[0].valuation_lower_bound();
    for (const C& c : coeffs_) v = std::min(v, c.valuation_lower_bound());
    return v;
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    const int n = std::min(x.order(), y.order());
    std::vector<C> out;
    for (int i = 0; i <= n; ++i) out.push_back(x[i] + y[i]);
    return TruncSeries(std::move(out), x.var_);
  }
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    const int n = std::min(x.order(), y.order());
    std::vector<C> out;
    for (int i = 0; i <= n; ++i) out.push_back(x[i] - y[i]);
    return TruncSeries(std::move(out), x.var_);
  }
  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    const int n = std::min(x.order(), y.order());
    std::vector<C> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      C acc = x[0] * y[k];
      for (int i = 1; i <= k; ++i) acc += x[i] * y[k - i];
      out.push_back(std::move(acc));
    }
    return TruncSeries(std::move(out), x.var_);
  }
  friend TruncSeries operator*(const TruncSeries& x, const C& c) {
    std::vector<C> out;
    for (const C& a : x.coeffs_) out.push_back(a * c);
    return TruncSeries(std::move(out), x.var_);
  }
  TruncSeries operator-() const {
    std::vector<C> out;
    for (const C& a : coeffs_) out.push_back(-a);
    return TruncSeries(std::move(out), var_);
  }

  /// Term-by-term derivative; known to one order less.
  TruncSeries derivative() const {
    if (order() == 0) return zero(0, coeffs_[0].abs_precision(), var_);
    std::vector<C> out;
    for (int i = 1; i <= order(); ++i)
      out.push_back(coeffs_[static_cast<std::size_t>(i)] * Dyadic::from_integer(i, coeffs_[0].abs_precision() + 64));
    return TruncSeries(std::move(out), var_);
  }

  /// Divides by u^k, dropping the first k coefficients (which the caller knows vanish).
  TruncSeries shifted_down(int k) const {
    if (k > order()) throw DimensionMismatch("shift exceeds truncation order");
    return TruncSeries(std::vector<C>(coeffs_.begin() + k, coeffs_.end()), var_);
  }

  /// "i: (valuation, unit)" lines; zero-to-precision coefficients print as (inf, 0).
  std::vector<std::string> dump() const {
    std::vector<std::string> lines;
    for (int i = 0; i <= order(); ++i) lines.push_back(std::to_string(i) + ": " + (*this)[i].dump());
    return lines;
  }

 private:
  std::vector<C> coeffs_;
  char var_;
};

/// num / den by long division. den[0] must be nonzero to precision; when it is not a unit each
/// step costs v(den[0]) digits.
template <class C>
TruncSeries<C> divide(const TruncSeries<C>& num, const TruncSeries<C>& den) {
  if (den[0].is_zero_to_precision())
    throw DivisionByZeroToPrecision("series division by a series with vanishing constant term");
  const int n = std::min(num.order(), den.order());
  std::vector<C> q;
  for (int k = 0; k <= n; ++k) {
    C acc = num[k];
    for (int i = 1; i <= k; ++i) acc -= den[i] * q[static_cast<std::size_t>(k - i)];
    q.push_back(acc / den[0]);
  }
  return TruncSeries<C>(std::move(q), num.variable_name());
}

template <class C>
TruncSeries<C> inverse(const TruncSeries<C>& s) {
  return divide(TruncSeries<C>::constant(C::one(s[0].abs_precision()), s.order(), s.variable_name()), s);
}

template <class C>
TruncSeries<C> pow(const TruncSeries<C>& s, int n) {
  auto result = TruncSeries<C>::constant(C::one(s[0].abs_precision()), s.order(), s.variable_name());
  for (int k = 0; k < n; ++k) result = result * s;
  return result;
}

/// sum_{k=0}^{i} u1^k u2^{i-k}, the complete homogeneous symmetric polynomial of degree i.
template <class C>
C complete_symmetric(int i, const C& u1, const C& u2) {
  std::int64_t prec = std::min(u1.abs_precision(), u2.abs_precision());
  C acc = C::zero(prec + 64);
  C p1 = C::one(prec + 64);
  for (int k = 0; k <= i; ++k) {
    C term = p1;
    for (int m = 0; m < i - k; ++m) term *= u2;
    acc += term;
    p1 *= u1;
  }
  return acc;
}

/// One term a_i * u^{i+1} / (i+1) of an antiderivative, with v(i+1) stored beside a_i.
template <class C>
struct IntegralTerm {
  int index;
  C coeff;
  std::int64_t denominator_valuation;
};

template <class C>
C divide_by_integer(const C& x, std::int64_t n) {
  return x / Dyadic::from_integer(n, x.abs_precision() + 64);
}

/// Formal antiderivative sum a_i u^{i+1}/(i+1), vanishing at u = 0.
template <class C>
class IntegralSeries {
 public:
  IntegralSeries(std::vector<IntegralTerm<C>> terms, char var) : terms_(std::move(terms)), var_(var) {}

  const std::vector<IntegralTerm<C>>& terms() const { return terms_; }
  char variable_name() const { return var_; }
  /// Highest integrand index kept.
  int order() const { return terms_.empty() ? -1 : terms_.back().index; }

  /// Recovers the integrand.
  TruncSeries<C> derivative() const {
    std::vector<C> out;
    for (const auto& t : terms_) out.push_back(t.coeff);
    return TruncSeries<C>(std::move(out), var_);
  }

  C evaluate(const C& u) const {
    C acc = C::zero(u.abs_precision() + 64);
    C power = u;
    for (const auto& t : terms_) {
      acc += divide_by_integer(t.coeff * power, t.index + 1);
      power *= u;
    }
    return acc;
  }

 private:
  std::vector<IntegralTerm<C>> terms_;
  char var_;
};

template <class C>
IntegralSeries<C> integrate(const TruncSeries<C>& f) {
  std::vector<IntegralTerm<C>> terms;
  for (int i = 0; i <= f.order(); ++i) terms.push_back({i, f[i], two_adic_valuation(i + 1)});
  return IntegralSeries<C>(std::move(terms), f.variable_name());
}

/// (F(u1) - F(u2)) / (u1 - u2) = sum a_i/(i+1) * h_i(u1, u2) for the antiderivative F.
template <class C>
class DiffQuotientTerms {
 public:
  explicit DiffQuotientTerms(std::vector<IntegralTerm<C>> terms) : terms_(std::move(terms)) {}

  const std::vector<IntegralTerm<C>>& terms() const { return terms_; }

  C evaluate(const C& u1, const C& u2) const {
    C acc = C::zero(std::min(u1.abs_precision(), u2.abs_precision()) + 64);
    for (const auto& t : terms_)
      acc += divide_by_integer(t.coeff * complete_symmetric(t.index, u1, u2), t.index + 1);
    return acc;
  }

 private:
  std::vector<IntegralTerm<C>> terms_;
};

template <class C>
DiffQuotientTerms<C> diff_quotient(const IntegralSeries<C>& F) {
  return DiffQuotientTerms<C>(F.terms());
}

// ---------------------------------------------------------------------------
// Expansions on the curve y^2 + y = h(x).

using DSeries = TruncSeries<Dyadic>;
using QSeries = TruncSeries<QuadDyadic>;

/// max(2g + 6, 16).
int default_truncation(int genus);

/// s = 1/x as a series in t = y/x^{g+1} at P_inf, solving t^2 + s^{g+1} t = s^{2g+2} h(1/s)
/// by fixed-point iteration. Requires 2-integral coefficients.
DSeries expand_s_of_t(const CurveModel& h, int T, std::int64_t precision = kDefaultPrecision);

/// Raw omega_1/dt = 1 / d/ds(t^2 + s^{g+1} t - s^{2g+2} h(1/s)), before normalization.
DSeries omega1_raw(const CurveModel& h, int T, std::int64_t precision = kDefaultPrecision);

/// omega_j/dt = s^{j-1} omega_1/dt with omega_1 scaled so that its constant term is exactly 1.
DSeries omega_at_infinity(const CurveModel& h, int j, int T, std::int64_t precision = kDefaultPrecision);

/// omega_1, ..., omega_g at once (one expansion of s shared by all).
std::vector<DSeries> omega_basis_at_infinity(const CurveModel& h, int T,
                                             std::int64_t precision = kDefaultPrecision);

/// y(x) near (x0, gamma): y^2 + y = h(x0 + x). gamma must solve gamma^2 + gamma = h(x0).
QSeries expand_y_of_x(const CurveModel& h, long long x0, const QuadDyadic& gamma, int T);

/// eta_j/dx = (x0 + x)^{j-1} / (2y(x) + 1).
QSeries eta_at_disk(const CurveModel& h, int j, long long x0, const QuadDyadic& gamma, int T);

/// eta_1, ..., eta_g at the disk (one expansion of y shared by all).
std::vector<QSeries> eta_basis_at_disk(const CurveModel& h, long long x0, const QuadDyadic& gamma, int T);

/// eta_j/dt at P_inf via x = 1/s, dx = -ds/s^2, y = t/s^{g+1}. Known modulo t^{T-1}.
DSeries eta_at_infinity(const CurveModel& h, int j, int T, std::int64_t precision = kDefaultPrecision);

/// omega_i = sum_j A_ij eta_j, so log coordinates transform as (omega) = A (eta).
struct BasisChange {
  int genus = 0;
  std::vector<std::vector<Dyadic>> entries;
  MatF2 mod2;
  bool det_odd = false;
};

/// Expands every eta_j at infinity and peels off omega_i by matching leading terms.
/// Throws SingularComparison if a leading coefficient is not a unit or a residual will not cancel.
BasisChange basis_change_matrix(const CurveModel& h, int T, std::int64_t precision = kDefaultPrecision);

}  // namespace sym2chab
