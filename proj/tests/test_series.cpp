#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sym2chab/curves.hpp"
#include "sym2chab/series.hpp"

using namespace sym2chab;

namespace {

constexpr std::int64_t kPrec = 48;

CurveModel h9() { return CurveModel::long_form(4, {0, 0, 0, 0, 0, 0, 0, 1, 1}); }

CurveModel random_good_lift(int g, std::mt19937_64& rng) {
  for (;;) {
    std::vector<long long> c(static_cast<std::size_t>(2 * g + 1));
    for (auto& x : c) x = static_cast<long long>(rng() % 41) - 20;
    CurveModel h = CurveModel::long_form(g, c);
    if (is_good(h).good) return h;
  }
}

bool series_vanish(const DSeries& s, int upto, std::int64_t k) {
  for (int i = 0; i <= upto; ++i)
    if (s[i].valuation_lower_bound() < k) return false;
  return true;
}

// sum_{e} c_e (x0 + x)^e, expanded directly.
QSeries h_shifted(const CurveModel& h, long long x0, int T) {
  const auto asc = h.ascending_dyadic(kPrec);
  auto base = QSeries::variable(T, kPrec, 'x');
  base[0] = QuadDyadic(Dyadic::from_integer(x0, kPrec));
  QSeries acc = QSeries::zero(T, kPrec, 'x');
  for (std::size_t e = 0; e < asc.size(); ++e) acc = acc + pow(base, static_cast<int>(e)) * QuadDyadic(asc[e]);
  return acc;
}

}  // namespace

TEST_CASE("default truncation") {
  CHECK(default_truncation(2) == 16);
  CHECK(default_truncation(5) == 16);
  CHECK(default_truncation(12) == 30);
}

TEST_CASE("s(t) for x^9 + x + 1") {
  const DSeries s = expand_s_of_t(h9(), 16, kPrec);
  REQUIRE(s.order() == 16);
  for (int i = 0; i <= 11; ++i) {
    const bool one = (i == 2 || i == 11);
    if (one) {
      CHECK(s[i].residue(kPrec) == 1);
    } else {
      CHECK(s[i].is_zero_to_precision());
    }
  }
}

TEST_CASE("s(t) satisfies the curve equation for random good lifts") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const CurveModel h = random_good_lift(g, rng);
    const int T = default_truncation(g);
    const DSeries s = expand_s_of_t(h, T, kPrec);
    CHECK(s[0].is_zero_to_precision());
    CHECK(s[1].is_zero_to_precision());
    CHECK(s[2].residue(kPrec) == 1);
    CHECK(s[3].valuation_lower_bound() >= 1);
    // sum_k s^k * [x^{2g+2-k}]h - t^2 - s^{g+1} t, with k running from 1 (the leading 1) to 2g+2.
    const auto asc = h.ascending_dyadic(kPrec);
    const DSeries t = DSeries::variable(T, kPrec);
    DSeries residual = -(t * t) - pow(s, g + 1) * t;
    for (int k = 1; k <= 2 * g + 2; ++k) residual = residual + pow(s, k) * asc[static_cast<std::size_t>(2 * g + 2 - k)];
    CHECK(series_vanish(residual, T, kPrec - 8));
  }
}

TEST_CASE("omega expansions") {
  const DSeries w1 = omega_at_infinity(h9(), 1, 16, kPrec);
  CHECK(w1[0].residue(kPrec) == 1);
  CHECK(w1[1].is_zero_to_precision());
  CHECK(w1[2].is_zero_to_precision());
  CHECK(omega1_raw(h9(), 16, kPrec)[0].signed_unit() == -1);

  const DSeries w2 = omega_at_infinity(h9(), 2, 16, kPrec);
  CHECK(w2[0].is_zero_to_precision());
  CHECK(w2[1].is_zero_to_precision());
  CHECK(w2[2].residue(kPrec) == 1);

  const CurveModel h2 = CurveModel::long_form(4, {0, 0, 0, 0, 0, 0, 1, 0, 1});
  CHECK(omega_at_infinity(h2, 1, 16, kPrec)[3].valuation_lower_bound() >= 1);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const CurveModel h = random_good_lift(g, rng);
    const auto basis = omega_basis_at_infinity(h, 16, kPrec);
    REQUIRE(basis.size() == static_cast<std::size_t>(g));
    // t^2 coefficient of omega_1 is -2 c_1.
    const Dyadic expect = Dyadic::from_integer(-2, kPrec) * h.ascending_dyadic(kPrec)[static_cast<std::size_t>(2 * g)];
    CHECK(congruent(basis[0][2], expect, kPrec - 8));
    CHECK(basis[0][1].is_zero_to_precision());
    for (int j = 1; j <= g; ++j) {
      const DSeries& w = basis[static_cast<std::size_t>(j - 1)];
      for (int i = 0; i < 2 * j - 2; ++i) CHECK(w[i].is_zero_to_precision());
      CHECK(w[2 * j - 2].residue(kPrec - 8) == 1);
      CHECK(w[2 * j - 1].valuation_lower_bound() >= 1);
      const DSeries direct = omega_at_infinity(h, j, 16, kPrec);
      for (int i = 0; i <= 16; ++i) CHECK(congruent(direct[i], w[i], kPrec - 8));
    }
  }
}

TEST_CASE("y(x) and eta on the pair disks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const CurveModel h = random_good_lift(g, rng);
    const int T = 16;
    for (long long x0 : {0LL, 1LL}) {
      const DyadicRational hx0 = h.evaluate(DyadicRational(x0));
      const QuadDyadic gamma = hensel_artin_schreier(hx0.to_dyadic(kPrec), kPrec);
      const QSeries y = expand_y_of_x(h, x0, gamma, T);
      CHECK(congruent(y[0], gamma, kPrec - 8));
      const QSeries residual = y * y + y - h_shifted(h, x0, T);
      for (int i = 0; i <= T; ++i) CHECK(residual[i].valuation_lower_bound() >= kPrec - 8);

      const QuadDyadic unit = gamma * Dyadic::from_integer(2, kPrec) + QuadDyadic::one(kPrec);
      BigInt hprime = 0;
      for (int e = 1; e <= h.degree(); ++e) {
        BigInt pw = 1;
        for (int k = 0; k < e - 1; ++k) pw *= x0;
        hprime += BigInt(e) * h.coefficient_of(e).numerator() * pw;
      }
      CHECK(congruent(y[1] * unit, QuadDyadic(Dyadic::from_integer(hprime, kPrec)), kPrec - 8));

      const auto eta = eta_basis_at_disk(h, x0, gamma, T);
      CHECK(congruent(eta[0][0] * unit, QuadDyadic::one(kPrec), kPrec - 8));
      // eta_{j+1} = (x0 + x) eta_j.
      for (int j = 1; j < g; ++j) {
        const QSeries& a = eta[static_cast<std::size_t>(j - 1)];
        const QSeries& b = eta[static_cast<std::size_t>(j)];
        CHECK(congruent(b[0], a[0] * Dyadic::from_integer(x0, kPrec), kPrec - 8));
        for (int i = 1; i <= T; ++i)
          CHECK(congruent(b[i], a[i] * Dyadic::from_integer(x0, kPrec) + a[i - 1], kPrec - 8));
      }
    }
    CHECK_THROWS_AS(expand_y_of_x(h, 0, QuadDyadic::w(kPrec) + QuadDyadic::one(kPrec) * Dyadic::from_integer(3, kPrec), 8),
                    Error);
  }
}

TEST_CASE("integration") {
  const DSeries one = DSeries::constant(Dyadic::one(kPrec), 4);
  const auto F = integrate(one);
  REQUIRE(!F.terms().empty());
  CHECK(F.terms()[0].index == 0);
  CHECK(F.terms()[0].coeff.residue(kPrec) == 1);
  CHECK(F.terms()[0].denominator_valuation == 0);

  DSeries cube = DSeries::zero(4, kPrec);
  cube[3] = Dyadic::one(kPrec);
  const auto G = integrate(cube);
  CHECK(G.terms()[3].index == 3);
  CHECK(G.terms()[3].coeff.residue(kPrec) == 1);
  CHECK(G.terms()[3].denominator_valuation == 2);
  const DSeries back = G.derivative();
  for (int i = 0; i <= 4; ++i) CHECK(congruent(back[i], cube[i], kPrec));
}

TEST_CASE("difference quotient identities") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    DSeries f = DSeries::zero(n, 64);
    for (int i = 0; i <= n; ++i) f[i] = Dyadic::from_integer(static_cast<long long>(rng() % 201) - 100, 64);
    const auto F = integrate(f);
    const auto Q = diff_quotient(F);
    const Dyadic u1 = Dyadic::from_integer(2 * static_cast<long long>(rng() % 1000), 64);
    Dyadic u2 = Dyadic::from_integer(2 * static_cast<long long>(rng() % 1000), 64);
    if ((u1 - u2).is_zero_to_precision()) u2 = u2 + Dyadic::from_integer(2, 64);
    const Dyadic lhs = (F.evaluate(u1) - F.evaluate(u2)) / (u1 - u2);
    CHECK(congruent(lhs, Q.evaluate(u1, u2), 32));
    // h_i(u1, u2) (u1 - u2) = u1^{i+1} - u2^{i+1}
    const int i = static_cast<int>(rng() % 8);
    Dyadic p1 = Dyadic::one(64), p2 = Dyadic::one(64);
    for (int k = 0; k <= i; ++k) {
      p1 *= u1;
      p2 *= u2;
    }
    CHECK(congruent(complete_symmetric(i, u1, u2) * (u1 - u2), p1 - p2, 48));
  }
  // u1 = u2 recovers the integrand.
  DSeries f = DSeries::zero(3, 64);
  f[0] = Dyadic::from_integer(3, 64);
  f[2] = Dyadic::from_integer(5, 64);
  const Dyadic u = Dyadic::from_integer(6, 64);
  CHECK(congruent(diff_quotient(integrate(f)).evaluate(u, u), Dyadic::from_integer(3 + 5 * 36, 64), 40));
}

TEST_CASE("basis change between eta and omega at infinity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const int g = 2 + static_cast<int>(rng() % 4);
    const CurveModel h = random_good_lift(g, rng);
    const int T = default_truncation(g);
    const BasisChange A = basis_change_matrix(h, T, kPrec);
    CHECK(A.det_odd);
    CHECK(A.mod2.rank() == static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        const Dyadic& a = A.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i + j == g - 1) {
          CHECK(congruent(a, Dyadic::from_integer(-1, kPrec), kPrec - 16));
        } else {
          CHECK(a.valuation_lower_bound() >= kPrec - 16);
        }
        CHECK(A.mod2.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == (i + j == g - 1));
      }
    // omega_i = sum_j A_ij eta_j, coefficient by coefficient.
    const auto omegas = omega_basis_at_infinity(h, T, kPrec);
    std::vector<DSeries> etas;
    for (int j = 1; j <= g; ++j) etas.push_back(eta_at_infinity(h, j, T, kPrec));
    for (int i = 0; i < g; ++i) {
      DSeries combo = DSeries::zero(etas[0].order(), kPrec);
      for (int j = 0; j < g; ++j)
        combo = combo + etas[static_cast<std::size_t>(j)] * A.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k <= combo.order(); ++k)
        CHECK(congruent(combo[k], omegas[static_cast<std::size_t>(i)][k], kPrec - 16));
    }
  }
  CHECK_THROWS(basis_change_matrix(h9(), 5, kPrec));
}
