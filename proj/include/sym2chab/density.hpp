#pragma once

// Exact densities for the family of good curves, as dyadic rationals.

#include <cstdint>

#include "sym2chab/dyadic_rational.hpp"

namespace sym2chab {

/// Fraction of patterns (c_1, ..., c_{2g+1}) in F_2^{2g+1} that are good, by a parity DP over
/// the exponents. Throws GenusTooSmall for g < 2.
DyadicRational goodness_fraction(int g);

/// The same fraction by enumerating all 2^{2g+1} patterns. Requires g <= 12.
DyadicRational goodness_fraction_bruteforce(int g);

/// Exponent of the coefficient scaling c_i -> 4^i c_i, i.e. sum_{i=1}^{2g+1} i.
std::int64_t scaling_determinant_exponent(int g);

/// goodness_fraction(g) * 4^{-(2g+1)(g+1)}.
DyadicRational family_density(int g);

struct DeltaBound {
  DyadicRational value;      // (1 - 6 * 2^{1-g}) * family_density(g)
  DyadicRational reference;  // 2^{-4g^2-6g-7}
  int comparison = 0;        // sign of value - reference
  bool vacuous = false;      // value <= 0
};

DeltaBound delta_lower_bound(int g);

}  // namespace sym2chab
