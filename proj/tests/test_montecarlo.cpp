#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sym2chab/montecarlo.hpp"

using namespace sym2chab;

namespace {

std::vector<ProjPtF2> image_g4() {
  std::vector<ProjPtF2> pts;
  for (const char* b : {"0001", "0011", "0101", "1000", "1111"}) pts.push_back(projectivize(F2Vec::parse(b)));
  return pts;
}

SimConfig config(std::uint64_t trials, std::uint64_t seed) {
  SimConfig c;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("rank distribution") {
  const RankModel m = RankModel::poonen_rains();
  const auto p = m.probabilities();
  REQUIRE(p.size() == 21);
  double total = 0;
  for (double x : p) total += x;
  CHECK(total == doctest::Approx(1.0));
  // Unnormalized weights prod_{j <= r} 2 / (2^j - 1).
  std::vector<double> w{1.0};
  for (int r = 1; r <= 20; ++r) w.push_back(w.back() * 2.0 / (std::ldexp(1.0, r) - 1.0));
  double z = 0;
  for (double x : w) z += x;
  for (int r = 0; r <= 20; ++r) CHECK(p[static_cast<std::size_t>(r)] == doctest::Approx(w[static_cast<std::size_t>(r)] / z));
  CHECK(m.mean_nonzero_elements() == doctest::Approx(2.0));

  const auto f = RankModel::fixed(3).probabilities();
  CHECK(f[3] == doctest::Approx(1.0));
}

TEST_CASE("counting floor") {
  CHECK(counting_floor(4, 5) == DyadicRational(BigInt(1), 2));
  CHECK(counting_floor(10, 5) == DyadicRational(1) - DyadicRational(BigInt(6), 9));
}

TEST_CASE("sampled Selmer data") {
  SimConfig c = config(1, 5);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const SelmerInput s = sample_selmer(c, 5, t);
    CHECK(s.genus == 4);
    CHECK(s.rank() <= 20);
    for (const auto& row : s.rows.row_vectors()) {
      CHECK(row.size() == 4);
      CHECK_FALSE(row.is_zero());
    }
    const SelmerInput again = sample_selmer(c, 5, t);
    CHECK(again.rows == s.rows);
  }
}

TEST_CASE("determinism across thread counts") {
  SimConfig a = config(20000, 7);
  a.threads = 1;
  SimConfig b = a;
  b.threads = 4;
  const SimReport ra = run_trials(a, image_g4());
  const SimReport rb = run_trials(b, image_g4());
  CHECK(ra.passes == rb.passes);
  CHECK(ra.seed == 7);
  CHECK(ra.label == std::string(kHeuristicLabel));
}

TEST_CASE("rank zero always passes") {
  SimConfig c = config(500, 1);
  c.rank_model = RankModel::fixed(0);
  const SimReport r = run_trials(c, image_g4());
  CHECK(r.passes == 500);
  CHECK(r.proportion == 1.0);
}

TEST_CASE("proportion stays above the counting floor") {
  const SimReport r4 = run_trials(config(20000, 3), image_g4());
  CHECK(r4.image_cardinality == 5);
  CHECK(r4.proportion >= r4.floor.to_double() - 4 * r4.sigma);
  CHECK(r4.sigma == doctest::Approx(std::sqrt(r4.proportion * (1 - r4.proportion) / 20000)));

  SimConfig c10 = config(5000, 3);
  c10.genus = 10;
  std::vector<ProjPtF2> img{projectivize(F2Vec::unit(10, 0))};
  const SimReport r10 = run_trials(c10, img);
  CHECK(r10.proportion >= r10.floor.to_double() - 4 * r10.sigma);
}

TEST_CASE("configuration errors") {
  SimConfig c;
  c.trials = 10;
  CHECK_THROWS_AS(run_trials(c, image_g4()), SeedMissing);
  c.strict = false;
  CHECK_NOTHROW(run_trials(c, image_g4()));
  SimConfig g5 = config(10, 1);
  g5.genus = 5;
  CHECK_THROWS_AS(run_trials(g5, image_g4()), DimensionMismatch);
  SimConfig g1 = config(10, 1);
  g1.genus = 1;
  CHECK_THROWS_AS(run_trials(g1, std::vector<ProjPtF2>{}), GenusTooSmall);
}
