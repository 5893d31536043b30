#include "sym2chab/series.hpp"

#include <algorithm>

namespace sym2chab {

namespace {

// H(s) = s^{2g+2} h(1/s) = sum_{k=1}^{2g+2} hb[k] s^k with hb[k] = coefficient of x^{2g+2-k}.
std::vector<Dyadic> reversed_coefficients(const CurveModel& h, std::int64_t precision) {
  if (!h.is_integral()) throw Error("local expansions need 2-integral coefficients");
  const int top = 2 * h.genus() + 2;
  std::vector<Dyadic> hb(static_cast<std::size_t>(top + 1), Dyadic::zero(precision));
  const auto asc = h.ascending_dyadic(precision);
  for (int k = 1; k <= top; ++k) hb[static_cast<std::size_t>(k)] = asc[static_cast<std::size_t>(top - k)];
  return hb;
}

// sum_{k=lo}^{hi} c[k] s^k by Horner.
DSeries horner(const std::vector<Dyadic>& c, int lo, int hi, const DSeries& s) {
  auto acc = DSeries::constant(c[static_cast<std::size_t>(hi)], s.order());
  for (int k = hi - 1; k >= lo; --k)
    acc = acc * s + DSeries::constant(c[static_cast<std::size_t>(k)], s.order());
  for (int k = 0; k < lo; ++k) acc = acc * s;
  return acc;
}

bool all_zero(const DSeries& s) {
  return std::all_of(s.coeffs().begin(), s.coeffs().end(),
                     [](const Dyadic& c) { return c.is_zero_to_precision(); });
}

}  // namespace

int default_truncation(int genus) { return std::max(2 * genus + 6, 16); }

DSeries expand_s_of_t(const CurveModel& h, int T, std::int64_t precision) {
  if (T < 2) throw Error("truncation order must be at least 2");
  const int g = h.genus();
  const auto hb = reversed_coefficients(h, precision);
  const auto t = DSeries::variable(T, precision);
  const auto t2 = t * t;
  auto s = DSeries::zero(T, precision);
  // s <- t^2 + s^{g+1} t - (H(s) - s). The map contracts, so each round fixes at least one more degree.
  for (int iter = 0; iter < T + 2; ++iter) {
    auto next = t2 + pow(s, g + 1) * t - horner(hb, 2, 2 * g + 2, s);
    if (all_zero(next - s)) return next;
    s = std::move(next);
  }
  throw NonConvergence("s(t) did not stabilize within " + std::to_string(T + 2) + " iterations");
}

DSeries omega1_raw(const CurveModel& h, int T, std::int64_t precision) {
  const int g = h.genus();
  const auto hb = reversed_coefficients(h, precision);
  const auto s = expand_s_of_t(h, T, precision);
  const auto t = DSeries::variable(T, precision);
  std::vector<Dyadic> dhb;  // coefficients of H'(s)
  for (int k = 1; k <= 2 * g + 2; ++k)
    dhb.push_back(hb[static_cast<std::size_t>(k)] * Dyadic::from_integer(k, precision));
  const auto dH = horner(dhb, 0, 2 * g + 1, s);
  const auto D = pow(s, g) * t * Dyadic::from_integer(g + 1, precision) - dH;
  return inverse(D);
}

DSeries omega_at_infinity(const CurveModel& h, int j, int T, std::int64_t precision) {
  if (j < 1 || j > h.genus()) throw DimensionMismatch("omega index out of range");
  const auto raw = omega1_raw(h, T, precision);
  const auto omega1 = raw * raw[0].inverse();
  if (j == 1) return omega1;
  return pow(expand_s_of_t(h, T, precision), j - 1) * omega1;
}

std::vector<DSeries> omega_basis_at_infinity(const CurveModel& h, int T, std::int64_t precision) {
  const auto raw = omega1_raw(h, T, precision);
  const auto s = expand_s_of_t(h, T, precision);
  std::vector<DSeries> out{raw * raw[0].inverse()};
  for (int j = 2; j <= h.genus(); ++j) out.push_back(out.back() * s);
  return out;
}

QSeries expand_y_of_x(const CurveModel& h, long long x0, const QuadDyadic& gamma, int T) {
  if (!h.is_integral()) throw Error("local expansions need 2-integral coefficients");
  const std::int64_t prec = gamma.abs_precision();
  const auto hx = translate(h, DyadicRational(x0)).ascending_dyadic(prec);
  const QuadDyadic h0(hx[0]);
  if (!congruent(gamma * gamma + gamma, h0, prec))
    throw Error("gamma is not a root of gamma^2 + gamma = h(x0)");
  const QuadDyadic two_gamma_plus_one = gamma * Dyadic::from_integer(2, prec) + QuadDyadic::one(prec);
  const QuadDyadic u = two_gamma_plus_one.inverse();
  std::vector<QuadDyadic> y{gamma};
  for (int n = 1; n <= T; ++n) {
    QuadDyadic acc = n < static_cast<int>(hx.size()) ? QuadDyadic(hx[static_cast<std::size_t>(n)])
                                                     : QuadDyadic::zero(prec);
    for (int k = 1; k < n; ++k) acc -= y[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(n - k)];
    y.push_back(acc * u);
  }
  return QSeries(std::move(y), 'x');
}

QSeries eta_at_disk(const CurveModel& h, int j, long long x0, const QuadDyadic& gamma, int T) {
  if (j < 1 || j > h.genus()) throw DimensionMismatch("eta index out of range");
  const std::int64_t prec = gamma.abs_precision();
  const auto y = expand_y_of_x(h, x0, gamma, T);
  auto eta = inverse(y * QuadDyadic(Dyadic::from_integer(2, prec)) +
                     QSeries::constant(QuadDyadic::one(prec), T, 'x'));
  const auto base = QSeries::constant(QuadDyadic(Dyadic::from_integer(x0, prec)), T, 'x') +
                    QSeries::variable(T, prec, 'x');
  for (int k = 1; k < j; ++k) eta = eta * base;
  return eta;
}

std::vector<QSeries> eta_basis_at_disk(const CurveModel& h, long long x0, const QuadDyadic& gamma, int T) {
  const std::int64_t prec = gamma.abs_precision();
  const auto y = expand_y_of_x(h, x0, gamma, T);
  std::vector<QSeries> out{inverse(y * QuadDyadic(Dyadic::from_integer(2, prec)) +
                                   QSeries::constant(QuadDyadic::one(prec), T, 'x'))};
  const auto base = QSeries::constant(QuadDyadic(Dyadic::from_integer(x0, prec)), T, 'x') +
                    QSeries::variable(T, prec, 'x');
  for (int j = 2; j <= h.genus(); ++j) out.push_back(out.back() * base);
  return out;
}

DSeries eta_at_infinity(const CurveModel& h, int j, int T, std::int64_t precision) {
  const int g = h.genus();
  if (j < 1 || j > g) throw DimensionMismatch("eta index out of range");
  const auto s = expand_s_of_t(h, T, precision);
  const auto ds = s.derivative();
  const auto t = DSeries::variable(T, precision);
  // eta_j/dt = -s^{g-j} s' / (2t + s^{g+1}); numerator and denominator both vanish at t = 0.
  const auto num = -(pow(s, g - j).truncated(T - 1) * ds);
  const auto den = t * Dyadic::from_integer(2, precision) + pow(s, g + 1);
  return divide(num.shifted_down(1), den.shifted_down(1));
}

BasisChange basis_change_matrix(const CurveModel& h, int T, std::int64_t precision) {
  const int g = h.genus();
  if (T < 2 * g + 2) throw Error("basis comparison needs truncation order at least 2g+2");
  std::vector<DSeries> eta;
  for (int j = 1; j <= g; ++j) eta.push_back(eta_at_infinity(h, j, T, precision));
  const int order = eta[0].order();

  BasisChange out;
  out.genus = g;
  out.entries.assign(static_cast<std::size_t>(g),
                     std::vector<Dyadic>(static_cast<std::size_t>(g), Dyadic::zero(precision)));
  out.mod2 = MatF2(static_cast<std::size_t>(g), static_cast<std::size_t>(g));

  const auto omega = omega_basis_at_infinity(h, T, precision);
  for (int i = 1; i <= g; ++i) {
    auto residual = omega[static_cast<std::size_t>(i - 1)].truncated(order);
    for (int step = 0;; ++step) {
      int d = 0;
      while (d <= order && residual[d].is_zero_to_precision()) ++d;
      if (d > order) break;
      // eta_j starts at t^{2(g-j)}, so only even degrees up to 2(g-1) can be cancelled.
      if (d % 2 != 0 || d > 2 * (g - 1) || step > g)
        throw SingularComparison("residual of omega_" + std::to_string(i) + " does not cancel at t^" +
                                 std::to_string(d));
      const int j = g - d / 2;
      const DSeries& e = eta[static_cast<std::size_t>(j - 1)];
      if (!e[d].is_unit())
        throw SingularComparison("leading coefficient of eta_" + std::to_string(j) + " is not a unit");
      const Dyadic c = residual[d] / e[d];
      auto& slot = out.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      slot += c;
      residual = residual - e * c;
    }
  }
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const Dyadic& a = out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (a.valuation_lower_bound() < 0) throw SingularComparison("basis change is not 2-integral");
      if (a.is_unit()) out.mod2.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
    }
  }
  out.det_odd = out.mod2.rank() == static_cast<std::size_t>(g);
  return out;
}

}  // namespace sym2chab
