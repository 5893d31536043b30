// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sym2chab/chabauty.hpp"
#include "sym2chab/curves.hpp"
#include "sym2chab/density.hpp"
#include "sym2chab/montecarlo.hpp"
#include "sym2chab/series.hpp"

using namespace sym2chab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion_line(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_s) out.fail("time limit " + std::to_string(limit_s) + " s exceeded");
  if (!out.ok) ++failures;
  std::printf("%s AC%-2d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

CurveModel random_good_lift(int g, std::mt19937_64& rng) {
  const int n = 2 * g + 1;
  for (;;) {
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    if (!is_good_pattern(g, mask)) continue;
    std::vector<long long> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(i)] = static_cast<long long>(mask >> i & 1U) + 2 * (static_cast<long long>(rng() % 21) - 10);
    return CurveModel::long_form(g, c);
  }
}

// Test-side Z_2[w] mod 2^k as residue pairs, w^2 = -w - 1.
struct Pair {
  BigInt a, b;
};

BigInt md(const BigInt& x, std::int64_t k) {
  const BigInt m = BigInt(1) << k;
  BigInt r = x % m;
  return r < 0 ? r + m : r;
}

Pair pmul(const Pair& x, const Pair& y, std::int64_t k) {
  return {md(x.a * y.a - x.b * y.b, k), md(x.a * y.b + x.b * y.a - x.b * y.b, k)};
}

bool same(const QuadDyadic& z, const Pair& p, std::int64_t k) {
  return z.a().residue(k) == md(p.a, k) && z.b().residue(k) == md(p.b, k);
}

constexpr std::int64_t kPrec = 32;

}  // namespace

int main() {
  std::mt19937_64 rng(20260101);

  criterion_line(1, "goodness measure 1/8 for g = 2..6, DP and exhaustive", 1.0, [] {
    Outcome o;
    for (int g = 2; g <= 6; ++g) {
      const DyadicRational eighth = DyadicRational::power_of_two(-3);
      if (goodness_fraction(g) != eighth) o.fail("DP at g = " + std::to_string(g));
      if (goodness_fraction_bruteforce(g) != eighth) o.fail("enumeration at g = " + std::to_string(g));
    }
    return o;
  });

  criterion_line(2, "1 point over F_2, 5 over F_4, above x in {0,1,inf}, every good pattern g = 2..6", 10.0, [] {
    Outcome o;
    int patterns = 0;
    for (int g = 2; g <= 6; ++g)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * g + 1)); ++mask) {
        if (!is_good_pattern(g, mask)) continue;
        ++patterns;
        const CurveModel h = pattern_curve(g, mask);
        const auto f2 = enumerate_points(h, FiniteField::F2);
        const auto f4 = enumerate_points(h, FiniteField::F4);
        if (f2.size() != 1 || f4.size() != 5) o.fail("wrong count for " + h.polynomial_string());
        for (const auto& p : f4)
          if (!p.at_infinity && !in_f2(p.x)) o.fail("point above a non-rational x for " + h.polynomial_string());
      }
    if (o.ok) o.detail = std::to_string(patterns) + " patterns";
    return o;
  });

  criterion_line(3, "Newton polygon of h + 1/4 for 100 random good lifts at g = 4", 1.0, [&] {
    Outcome o;
    for (int trial = 0; trial < 100; ++trial) {
      const CurveModel h = random_good_lift(4, rng);
      const NewtonPolygon np = newton_polygon(complete_square(h));
      const bool shape = np.vertices.size() == 2 && np.vertices[0] == std::pair<int, std::int64_t>{0, -2} &&
                         np.vertices[1] == std::pair<int, std::int64_t>{9, 0};
      if (!shape || !np.irreducible_by_polygon) o.fail("polygon of " + h.polynomial_string());
    }
    return o;
  });

  std::vector<CurveModel> sample;
  for (int g : {4, 5})
    for (int k = 0; k < 25; ++k) sample.push_back(random_good_lift(g, rng));

  criterion_line(4, "series structure at infinity for 50 random good lifts, g in {4,5}", 30.0, [&] {
    Outcome o;
    const int T = 16;
    const std::int64_t prec = 48;
    for (const CurveModel& h : sample) {
      const int g = h.genus();
      const std::string name = h.polynomial_string();
      const DSeries s = expand_s_of_t(h, T, prec);
      const auto asc = h.ascending_dyadic(prec);
      const DSeries t = DSeries::variable(T, prec);
      DSeries residual = -(t * t) - pow(s, g + 1) * t;
      for (int k = 1; k <= 2 * g + 2; ++k) residual = residual + pow(s, k) * asc[static_cast<std::size_t>(2 * g + 2 - k)];
      for (int i = 0; i <= T; ++i)
        if (residual[i].valuation_lower_bound() < prec - 8) o.fail("curve equation mod t^17 for " + name);
      if (!s[0].is_zero_to_precision() || !s[1].is_zero_to_precision()) o.fail("t^0/t^1 of s for " + name);
      if (!s[2].is_unit()) o.fail("t^2 of s not a unit for " + name);
      if (s[3].valuation_lower_bound() < 1) o.fail("t^3 of s odd for " + name);
      const auto omegas = omega_basis_at_infinity(h, T, prec);
      for (int j = 1; j <= g; ++j) {
        const DSeries& w = omegas[static_cast<std::size_t>(j - 1)];
        for (int i = 0; i < 2 * j - 2; ++i)
          if (!w[i].is_zero_to_precision()) o.fail("omega_" + std::to_string(j) + " starts early for " + name);
        if (w[2 * j - 2].residue(prec - 8) != 1) o.fail("omega_" + std::to_string(j) + " leading coefficient");
        if (w[2 * j - 1].valuation_lower_bound() < 1) o.fail("omega_" + std::to_string(j) + " next coefficient odd");
      }
    }
    return o;
  });

  criterion_line(5, "disk certificates, re-checker and |image| <= 5 for the same 50 curves", 120.0, [&] {
    Outcome o;
    std::size_t largest = 0;
    for (const CurveModel& h : sample) {
      const int g = h.genus();
      const std::string name = h.polynomial_string();
      const RhoLogImage img = assemble_rholog(h, default_truncation(g), kPrec);
      F2Vec e1 = F2Vec::unit(static_cast<std::size_t>(g), 0);
      F2Vec e12 = e1;
      e12.set(1, true);
      if (img.infinity.image != std::vector<ProjPtF2>{projectivize(e1)}) o.fail("infinity image for " + name);
      for (const DiskCertificate* c : {&img.zero_pair, &img.one_pair}) {
        std::set<ProjPtF2> got(c->image.begin(), c->image.end());
        if (got != std::set<ProjPtF2>{projectivize(e1), projectivize(e12)}) o.fail("pair image for " + name);
      }
      for (const DiskCertificate* c : {&img.infinity, &img.zero_pair, &img.one_pair}) {
        for (const TermBound& t : c->terms)
          if (!t.survivor && t.net <= HalfVal(0)) o.fail("non-positive term bound for " + name);
        if (!c->tail.holds()) o.fail("tail lemma for " + name);
        const RecheckResult r = recheck(*c);
        if (!r.accepted) o.fail("re-checker rejected " + to_string(c->disk) + " for " + name + ": " + r.reason);
      }
      largest = std::max(largest, img.cardinality());
      if (img.cardinality() > 5) o.fail("image of size " + std::to_string(img.cardinality()) + " for " + name);
    }
    if (o.ok) o.detail = "largest image " + std::to_string(largest);
    return o;
  });

  criterion_line(6, "local constancy under h -> h + 2^18 delta at g = 4, 10 pairs", 60.0, [&] {
    Outcome o;
    for (int trial = 0; trial < 10; ++trial) {
      const CurveModel h = random_good_lift(4, rng);
      std::vector<DyadicRational> c = h.coeffs();
      for (auto& x : c) x += DyadicRational(static_cast<long long>(rng() % 2001) - 1000) * DyadicRational::power_of_two(18);
      const CurveModel h2(4, ModelKind::LongW, c);
      const int T = default_truncation(4);
      if (assemble_rholog(h, T, kPrec).points != assemble_rholog(h2, T, kPrec).points)
        o.fail("images differ for " + h.polynomial_string());
    }
    return o;
  });

  criterion_line(7, "exact densities and the lower bound", 1.0, [] {
    Outcome o;
    for (int g = 2; g <= 10; ++g)
      if (family_density(g) != DyadicRational::power_of_two(-4LL * g * g - 6LL * g - 5))
        o.fail("family density at g = " + std::to_string(g));
    const DeltaBound d4 = delta_lower_bound(4);
    if (d4.value != DyadicRational::power_of_two(-95) || d4.comparison != 0) o.fail("bound at g = 4");
    const DeltaBound d3 = delta_lower_bound(3);
    if (d3.value.sign() > 0 || !d3.vacuous) o.fail("bound at g = 3 should be vacuous");
    if (o.ok) o.detail = "g = 4: " + d4.value.to_exponent_string() + ", g = 3: " + d3.value.to_exponent_string();
    return o;
  });

  criterion_line(8, "criterion truth table at g = 4, every Selmer row tuple of rank <= 3", 10.0, [] {
    Outcome o;
    const RhoLogImage img = assemble_rholog(CurveModel::long_form(4, {0, 0, 0, 0, 0, 0, 0, 1, 1}), 16, kPrec);
    std::set<unsigned> preimage;
    for (const auto& p : img.points) {
      unsigned v = 0;
      for (std::size_t i = 0; i < 4; ++i) v |= static_cast<unsigned>(p.coords().get(i)) << i;
      preimage.insert(v);
    }
    if (preimage.size() != 5) o.fail("fixed image does not have 5 points");
    long cases = 0;
    for (int r = 0; r <= 3; ++r) {
      const unsigned total = 1U << (4 * r);
      for (unsigned code = 0; code < total; ++code) {
        std::vector<unsigned> rows;
        SelmerInput sel;
        sel.genus = 4;
        sel.rows = MatF2(0, 4);
        for (int k = 0; k < r; ++k) {
          rows.push_back(code >> (4 * k) & 0xFU);
          F2Vec v(4);
          for (std::size_t i = 0; i < 4; ++i) v.set(i, rows.back() >> i & 1U);
          sel.rows.append_row(v);
        }
        bool independent = true, avoids = true;
        for (unsigned mask = 1; mask < (1U << r); ++mask) {
          unsigned v = 0;
          for (int k = 0; k < r; ++k)
            if (mask >> k & 1U) v ^= rows[static_cast<std::size_t>(k)];
          if (v == 0) independent = false;
          else if (preimage.count(v)) avoids = false;
        }
        const CriterionVerdict verdict = criterion(img, sel, true);
        if (verdict.overall != (independent && avoids) || verdict.sigma_injective != independent)
          o.fail("disagreement at rank " + std::to_string(r) + ", code " + std::to_string(code));
        ++cases;
      }
    }
    if (o.ok) o.detail = std::to_string(cases) + " cases";
    return o;
  });

  criterion_line(9, "Monte Carlo at g = 4, n = 1e5, seed 7: proportion >= 0.25 - 3 sigma", 60.0, [] {
    Outcome o;
    SimConfig cfg;
    cfg.genus = 4;
    cfg.trials = 100000;
    cfg.seed = 7;
    const RhoLogImage img = assemble_rholog(CurveModel::long_form(4, {0, 0, 0, 0, 0, 0, 0, 1, 1}), 16, kPrec);
    const SimReport r = run_trials(cfg, img);
    if (r.floor != DyadicRational(BigInt(1), 2)) o.fail("floor is not 1/4");
    if (r.proportion < 0.25 - 3 * r.sigma) o.fail("proportion below the floor");
    char buf[96];
    std::snprintf(buf, sizeof buf, "p = %.5f, sigma = %.5f", r.proportion, r.sigma);
    if (o.ok) o.detail = buf;
    return o;
  });

  criterion_line(10, "10^4 Hensel residual and ring-axiom checks at precision 32", 5.0, [&] {
    Outcome o;
    const std::int64_t k = 32;
    auto rand_int = [&] { return BigInt(static_cast<long long>(rng() >> 1)) - (BigInt(1) << 62); };
    for (int n = 0; n < 2500; ++n) {
      // Hensel: gamma^2 + gamma - c vanishes mod 2^32, checked on residue pairs.
      const BigInt c = rand_int();
      const QuadDyadic g = hensel_artin_schreier(Dyadic::from_integer(c, k), k);
      const Pair gp{g.a().residue(k), g.b().residue(k)};
      const Pair sq = pmul(gp, gp, k);
      if (md(sq.a + gp.a - c, k) != 0 || md(sq.b + gp.b, k) != 0) o.fail("Hensel residual for c = " + c.str());

      const Pair p{rand_int(), rand_int()}, q{rand_int(), rand_int()}, r{rand_int(), rand_int()};
      auto lift = [&](const Pair& x) { return QuadDyadic(Dyadic::from_integer(x.a, k), Dyadic::from_integer(x.b, k)); };
      const QuadDyadic x = lift(p), y = lift(q), z = lift(r);
      if (!same(x * y, pmul(p, q, k), k)) o.fail("product");
      if (!same((x * y) * z, pmul(p, pmul(q, r, k), k), k)) o.fail("associativity");
      if (!same(x * (y + z), Pair{pmul(p, q, k).a + pmul(p, r, k).a, pmul(p, q, k).b + pmul(p, r, k).b}, k))
        o.fail("distributivity");
    }
    if (o.ok) o.detail = "10000 checks";
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
