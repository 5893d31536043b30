#pragma once

// Odd-degree hyperelliptic models y^2 + y = h(x) (long) and y^2 = f(x) (short), the goodness
// predicate on h mod 2, Newton polygons, and the special fibre over F_2 / F_4.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sym2chab/dyadic.hpp"
#include "sym2chab/dyadic_rational.hpp"
#include "sym2chab/modp.hpp"

namespace sym2chab {

enum class ModelKind { LongW, ShortW };

std::string to_string(ModelKind kind);

/// Monic degree-(2g+1) right-hand side. coeffs[i-1] = c_i is the coefficient of x^{2g+1-i}.
class CurveModel {
 public:
  /// Throws GenusTooSmall for g < 2 and DimensionMismatch unless exactly 2g+1 coefficients are given.
  CurveModel(int genus, ModelKind kind, std::vector<DyadicRational> coeffs);

  static CurveModel long_form(int genus, const std::vector<long long>& coeffs);
  static CurveModel short_form(int genus, const std::vector<long long>& coeffs);

  int genus() const { return genus_; }
  int degree() const { return 2 * genus_ + 1; }
  ModelKind kind() const { return kind_; }
  const std::vector<DyadicRational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^e for 0 <= e <= 2g+1 (the leading one is 1).
  DyadicRational coefficient_of(int exponent) const;
  /// Coefficients indexed by exponent, including the leading 1.
  std::vector<DyadicRational> ascending() const;
  std::vector<Dyadic> ascending_dyadic(std::int64_t abs_precision) const;
  DyadicRational evaluate(const DyadicRational& x) const;

  bool is_integral() const;
  /// h mod 2 indexed by exponent. Requires 2-integral coefficients.
  std::vector<bool> mod2_ascending() const;

  std::string polynomial_string() const;

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  int genus_;
  ModelKind kind_;
  std::vector<DyadicRational> coeffs_;
};

/// "c_1, ..., c_{2g+1}" as decimal integers.
std::vector<long long> parse_coefficient_list(std::string_view text);
/// One line of a curve file, "g; c_1, c_2, ..., c_{2g+1}".
CurveModel parse_curve_line(std::string_view line, ModelKind kind = ModelKind::LongW);

// ---------------------------------------------------------------------------
// Goodness

struct GoodnessReport {
  std::vector<int> exponents;  // S
  std::vector<int> s0, s1, s2;  // S split by exponent mod 3
  bool contains_0_and_top = false;
  bool s0_even = false;
  bool s12_odd = false;
  bool good = false;
};

/// Evaluates the exponent-set parity conditions on h mod 2.
GoodnessReport is_good(const CurveModel& h);

/// Every h mod 2 over F_2 for genus g, as 0/1 integer lifts; mask bit i-1 is c_i.
CurveModel pattern_curve(int genus, std::uint64_t mask);
bool is_good_pattern(int genus, std::uint64_t mask);

// ---------------------------------------------------------------------------
// Model transformations

/// f = h + 1/4.
CurveModel complete_square(const CurveModel& h);
/// h = f - 1/4.
CurveModel uncomplete_square(const CurveModel& f);
/// f(x) = 4^{2g+1} h(x/4) + 4^{2g}. Requires integer coefficients.
CurveModel scale_to_family(const CurveModel& h);
/// Inverse of scale_to_family when f lies in its image with integral h, else nullopt.
std::optional<CurveModel> unscale_from_family(const CurveModel& f);
/// ht = max |a_i|^{1/i} over the nonzero coefficients, as a double. Reporting only.
double height(const CurveModel& f);
/// h(x + a).
CurveModel translate(const CurveModel& h, const DyadicRational& a);

// ---------------------------------------------------------------------------
// Newton polygon

struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonPolygon {
  std::vector<std::pair<int, std::int64_t>> vertices;  // (exponent, valuation)
  std::vector<Slope> slopes;
  /// Single edge with no lattice point strictly inside it: irreducible over Q_2.
  bool irreducible_by_polygon = false;
};

/// Lower convex hull of (i, v(c_i)) for ascending coefficients c_0..c_n. Coefficients that are
/// zero to precision must lie on or above the hull of the known ones, else PrecisionExhausted.
NewtonPolygon newton_polygon(const std::vector<Dyadic>& ascending);
/// Exact version for a model's right-hand side.
NewtonPolygon newton_polygon(const CurveModel& f);

// ---------------------------------------------------------------------------
// Special fibre

enum class FiniteField { F2, F4 };

struct CurvePoint {
  bool at_infinity = false;
  F4 x = F4::Zero;
  F4 y = F4::Zero;
  std::string to_string() const;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Points of y^2 + y = h(x) mod 2 over the field, P_inf first, then by (x, y) code.
std::vector<CurvePoint> enumerate_points(const CurveModel& h, FiniteField field);
F4 evaluate_mod2(const CurveModel& h, F4 x);

/// Hyperelliptic involution on the special fibre: (x, y) -> (x, y + 1), fixing P_inf.
CurvePoint involution(const CurvePoint& p);

struct Sym2Class {
  enum class Kind { TwoInfinity, PairAt, Other };
  Kind kind = Kind::Other;
  F4 x0 = F4::Zero;  // meaningful for PairAt
  CurvePoint first;
  CurvePoint second;
  bool is_hyperelliptic_fiber = false;
  std::string to_string() const;
};

/// All F_2-rational effective degree-2 divisors on the special fibre, with no goodness assumption.
std::vector<Sym2Class> enumerate_sym2_classes(const CurveModel& h);
/// The three classes of a good h; throws NotGood otherwise.
std::vector<Sym2Class> sym2_classes(const CurveModel& h);
/// Exactly three classes, each a fibre of x, so each is trivial in J(F_2).
bool torsion_condition_holds(const std::vector<Sym2Class>& classes);

}  // namespace sym2chab
