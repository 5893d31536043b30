#include "sym2chab/density.hpp"

#include <array>
#include <string>

#include "sym2chab/curves.hpp"
#include "sym2chab/errors.hpp"

namespace sym2chab {

namespace {

void require_genus(int g) {
  if (g < 2) throw GenusTooSmall("genus " + std::to_string(g) + " is below 2");
}

}  // namespace

DyadicRational goodness_fraction(int g) {
  require_genus(g);
  const int top = 2 * g + 1;
  // count[a][b]: patterns so far with #S_0 = a and #(S_1 u S_2) = b mod 2.
  std::array<std::array<BigInt, 2>, 2> count{};
  count[1][0] = 1;  // exponent 0 must lie in S (and 0 = 0 mod 3)
  for (int e = 1; e < top; ++e) {
    auto next = count;  // c = 0 leaves the state alone
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (e % 3 == 0)
          next[a ^ 1][b] += count[a][b];
        else
          next[a][b ^ 1] += count[a][b];
      }
    count = next;
  }
  // The leading exponent 2g+1 is always present.
  const bool top_in_s0 = top % 3 == 0;
  const BigInt good = top_in_s0 ? count[1][1] : count[0][0];
  // The pattern ranges over the 2g+1 free coefficients c_1..c_{2g+1}, i.e. exponents 0..2g.
  return DyadicRational(good, top);
}

DyadicRational goodness_fraction_bruteforce(int g) {
  require_genus(g);
  if (g > 12) throw DimensionMismatch("exhaustive enumeration limited to g <= 12");
  const int n = 2 * g + 1;
  BigInt good = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (is_good_pattern(g, mask)) ++good;
  return DyadicRational(good, n);
}

std::int64_t scaling_determinant_exponent(int g) {
  std::int64_t sum = 0;
  for (int i = 1; i <= 2 * g + 1; ++i) sum += i;
  return sum;
}

DyadicRational family_density(int g) {
  require_genus(g);
  return goodness_fraction(g) * DyadicRational::power_of_two(-2 * scaling_determinant_exponent(g));
}

DeltaBound delta_lower_bound(int g) {
  require_genus(g);
  DeltaBound out;
  const DyadicRational factor = DyadicRational(1) - DyadicRational(6) * DyadicRational::power_of_two(1 - g);
  out.value = factor * family_density(g);
  out.reference = DyadicRational::power_of_two(-4LL * g * g - 6LL * g - 7);
  const auto cmp = out.value <=> out.reference;
  out.comparison = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
  out.vacuous = out.value.sign() <= 0;
  return out;
}

}  // namespace sym2chab
