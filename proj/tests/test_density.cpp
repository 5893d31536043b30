#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sym2chab/curves.hpp"
#include "sym2chab/density.hpp"

using namespace sym2chab;

TEST_CASE("goodness fraction: dynamic program against enumeration") {
  for (int g = 2; g <= 8; ++g) {
    CHECK(goodness_fraction(g) == goodness_fraction_bruteforce(g));
    CHECK(goodness_fraction(g) == DyadicRational::power_of_two(-3));
  }
  CHECK(goodness_fraction(12) == DyadicRational::power_of_two(-3));
  CHECK(goodness_fraction(40) == DyadicRational::power_of_two(-3));
}

TEST_CASE("goodness fraction at g = 20 by sampling") {
  std::mt19937_64 rng(31);
  const int n = 200000;
  int good = 0;
  for (int i = 0; i < n; ++i) good += is_good_pattern(20, rng() & ((std::uint64_t{1} << 41) - 1));
  const double p = static_cast<double>(good) / n;
  const double sigma = std::sqrt(0.125 * 0.875 / n);
  CHECK(std::abs(p - 0.125) < 4 * sigma);
}

TEST_CASE("scaling determinant and family density") {
  for (int g = 2; g <= 12; ++g) {
    CHECK(scaling_determinant_exponent(g) == 2LL * g * g + 3LL * g + 1);
    CHECK(family_density(g) == DyadicRational::power_of_two(-4LL * g * g - 6LL * g - 5));
  }
  CHECK(family_density(3).to_exponent_string() == "2^-59");
  CHECK(family_density(4).to_exponent_string() == "2^-93");
}

TEST_CASE("lower bound on the proportion") {
  const DeltaBound d3 = delta_lower_bound(3);
  CHECK(d3.vacuous);
  CHECK(d3.value == -DyadicRational::power_of_two(-60));

  const DeltaBound d4 = delta_lower_bound(4);
  CHECK_FALSE(d4.vacuous);
  CHECK(d4.value == DyadicRational::power_of_two(-95));
  CHECK(d4.comparison == 0);

  const DeltaBound d5 = delta_lower_bound(5);
  CHECK(d5.value == DyadicRational(BigInt(5), 138));
  CHECK(d5.comparison == 1);

  for (int g = 5; g <= 15; ++g) CHECK(delta_lower_bound(g).comparison == 1);
  CHECK(delta_lower_bound(2).vacuous);
}

TEST_CASE("genus below two") {
  CHECK_THROWS_AS(goodness_fraction(1), GenusTooSmall);
  CHECK_THROWS_AS(family_density(0), GenusTooSmall);
  CHECK_THROWS_AS(delta_lower_bound(1), GenusTooSmall);
  CHECK_THROWS_AS(goodness_fraction_bruteforce(1), GenusTooSmall);
}
