#include "sym2chab/curves.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sym2chab {

std::string to_string(ModelKind kind) { return kind == ModelKind::LongW ? "long" : "short"; }

CurveModel::CurveModel(int genus, ModelKind kind, std::vector<DyadicRational> coeffs)
    : genus_(genus), kind_(kind), coeffs_(std::move(coeffs)) {
  if (genus < 2) throw GenusTooSmall("genus must be at least 2, got " + std::to_string(genus));
  if (coeffs_.size() != static_cast<std::size_t>(2 * genus + 1))
    throw DimensionMismatch("genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus + 1) +
                            " coefficients, got " + std::to_string(coeffs_.size()));
}

namespace {

std::vector<DyadicRational> to_rationals(const std::vector<long long>& c) {
  return {c.begin(), c.end()};
}

}  // namespace

CurveModel CurveModel::long_form(int genus, const std::vector<long long>& coeffs) {
  return CurveModel(genus, ModelKind::LongW, to_rationals(coeffs));
}

CurveModel CurveModel::short_form(int genus, const std::vector<long long>& coeffs) {
  return CurveModel(genus, ModelKind::ShortW, to_rationals(coeffs));
}

DyadicRational CurveModel::coefficient_of(int exponent) const {
  if (exponent == degree()) return 1;
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree() - exponent - 1)];
}

std::vector<DyadicRational> CurveModel::ascending() const {
  std::vector<DyadicRational> out;
  for (int e = 0; e <= degree(); ++e) out.push_back(coefficient_of(e));
  return out;
}

std::vector<Dyadic> CurveModel::ascending_dyadic(std::int64_t abs_precision) const {
  std::vector<Dyadic> out;
  for (const auto& c : ascending()) out.push_back(c.to_dyadic(abs_precision));
  return out;
}

DyadicRational CurveModel::evaluate(const DyadicRational& x) const {
  DyadicRational acc = 0;
  for (int e = degree(); e >= 0; --e) acc = acc * x + coefficient_of(e);
  return acc;
}

bool CurveModel::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const DyadicRational& c) { return c.is_integer(); });
}

std::vector<bool> CurveModel::mod2_ascending() const {
  std::vector<bool> out;
  for (const auto& c : ascending()) {
    if (!c.is_integer()) throw Error("coefficient " + c.to_string() + " is not a 2-adic integer");
    out.push_back(boost::multiprecision::bit_test(boost::multiprecision::abs(c.numerator()), 0));
  }
  return out;
}

std::string CurveModel::polynomial_string() const {
  std::ostringstream os;
  os << "x^" << degree();
  for (int e = degree() - 1; e >= 0; --e) {
    const DyadicRational c = coefficient_of(e);
    if (c.is_zero()) continue;
    os << (c.sign() < 0 ? " - " : " + ");
    const DyadicRational mag = c.sign() < 0 ? -c : c;
    const bool unit_coeff = mag == DyadicRational(1);
    if (!unit_coeff || e == 0) os << mag.to_string();
    if (e > 0) os << (unit_coeff ? "" : "*") << "x";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::vector<long long> parse_coefficient_list(std::string_view text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
    if (tok.front() == '+') tok.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("not a decimal integer: '" + std::string(tok) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

CurveModel parse_curve_line(std::string_view line, ModelKind kind) {
  const std::size_t semi = line.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'g; c_1, ..., c_{2g+1}'");
  std::string_view gtext = line.substr(0, semi);
  while (!gtext.empty() && std::isspace(static_cast<unsigned char>(gtext.front()))) gtext.remove_prefix(1);
  while (!gtext.empty() && std::isspace(static_cast<unsigned char>(gtext.back()))) gtext.remove_suffix(1);
  int g = 0;
  auto [ptr, ec] = std::from_chars(gtext.data(), gtext.data() + gtext.size(), g);
  if (ec != std::errc() || ptr != gtext.data() + gtext.size() || gtext.empty())
    throw ParseError("bad genus '" + std::string(gtext) + "'");
  const auto coeffs = parse_coefficient_list(line.substr(semi + 1));
  try {
    return CurveModel(g, kind, to_rationals(coeffs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------

GoodnessReport is_good(const CurveModel& h) {
  if (h.kind() != ModelKind::LongW) throw Error("goodness is defined for long Weierstrass models");
  const std::vector<bool> bits = h.mod2_ascending();
  GoodnessReport r;
  for (int e = 0; e <= h.degree(); ++e) {
    if (!bits[static_cast<std::size_t>(e)]) continue;
    r.exponents.push_back(e);
    (e % 3 == 0 ? r.s0 : e % 3 == 1 ? r.s1 : r.s2).push_back(e);
  }
  r.contains_0_and_top = bits.front() && bits.back();
  r.s0_even = r.s0.size() % 2 == 0;
  r.s12_odd = (r.s1.size() + r.s2.size()) % 2 == 1;
  r.good = r.contains_0_and_top && r.s0_even && r.s12_odd;
  return r;
}

CurveModel pattern_curve(int genus, std::uint64_t mask) {
  std::vector<long long> c(static_cast<std::size_t>(2 * genus + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long long>((mask >> i) & 1U);
  return CurveModel::long_form(genus, c);
}

bool is_good_pattern(int genus, std::uint64_t mask) { return is_good(pattern_curve(genus, mask)).good; }

// ---------------------------------------------------------------------------

CurveModel complete_square(const CurveModel& h) {
  if (h.kind() != ModelKind::LongW) throw Error("complete_square expects a long model");
  auto c = h.coeffs();
  c.back() += DyadicRational(1, 2);
  return CurveModel(h.genus(), ModelKind::ShortW, std::move(c));
}

CurveModel uncomplete_square(const CurveModel& f) {
  if (f.kind() != ModelKind::ShortW) throw Error("uncomplete_square expects a short model");
  auto c = f.coeffs();
  c.back() = c.back() - DyadicRational(1, 2);
  return CurveModel(f.genus(), ModelKind::LongW, std::move(c));
}

CurveModel scale_to_family(const CurveModel& h) {
  if (!h.is_integral()) throw Error("scale_to_family needs integer coefficients");
  const int g = h.genus();
  auto c = h.coeffs();
  for (std::size_t i = 1; i <= c.size(); ++i) c[i - 1] = c[i - 1].shifted(2 * static_cast<std::int64_t>(i));
  c.back() += DyadicRational::power_of_two(4 * g);
  return CurveModel(g, ModelKind::ShortW, std::move(c));
}

std::optional<CurveModel> unscale_from_family(const CurveModel& f) {
  if (!f.is_integral()) return std::nullopt;
  const int g = f.genus();
  auto c = f.coeffs();
  c.back() = c.back() - DyadicRational::power_of_two(4 * g);
  for (std::size_t i = 1; i <= c.size(); ++i) {
    c[i - 1] = c[i - 1].shifted(-2 * static_cast<std::int64_t>(i));
    if (!c[i - 1].is_integer()) return std::nullopt;
  }
  return CurveModel(g, ModelKind::LongW, std::move(c));
}

double height(const CurveModel& f) {
  double best = 0.0;
  for (std::size_t i = 1; i <= f.coeffs().size(); ++i) {
    const double a = std::fabs(f.coeffs()[i - 1].to_double());
    if (a == 0.0) continue;
    best = std::max(best, std::log2(a) / static_cast<double>(i));
  }
  return std::exp2(best);
}

CurveModel translate(const CurveModel& h, const DyadicRational& a) {
  // Horner in the shifted variable: acc <- acc * (x + a) + p_e.
  const int n = h.degree();
  std::vector<DyadicRational> acc;  // ascending
  for (int e = n; e >= 0; --e) {
    std::vector<DyadicRational> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * a;
    }
    next[0] += h.coefficient_of(e);
    acc = std::move(next);
  }
  std::vector<DyadicRational> c;
  for (int e = n - 1; e >= 0; --e) c.push_back(acc[static_cast<std::size_t>(e)]);
  return CurveModel(h.genus(), h.kind(), std::move(c));
}

// ---------------------------------------------------------------------------

namespace {

using Pt = std::pair<int, std::int64_t>;

// Cross product sign of (a - o) x (b - o); wide enough for any 64-bit valuations we see.
__int128 cross(const Pt& o, const Pt& a, const Pt& b) {
  return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
         static_cast<__int128>(a.second - o.second) * (b.first - o.first);
}

NewtonPolygon hull_of(const std::vector<Pt>& pts) {
  NewtonPolygon np;
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  np.vertices = hull;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    std::int64_t dx = hull[k].first - hull[k - 1].first;
    std::int64_t dy = hull[k].second - hull[k - 1].second;
    const std::int64_t gcd = std::gcd(dx, dy < 0 ? -dy : dy);
    np.slopes.push_back({dy / gcd, dx / gcd});
  }
  if (hull.size() == 2) {
    const std::int64_t dx = hull[1].first - hull[0].first;
    const std::int64_t dy = hull[1].second - hull[0].second;
    np.irreducible_by_polygon = hull[0].first == 0 && std::gcd(dx, dy < 0 ? -dy : dy) == 1;
  }
  return np;
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<Dyadic>& ascending) {
  if (ascending.size() < 2) throw DimensionMismatch("Newton polygon needs degree >= 1");
  std::vector<Pt> known;
  std::vector<Pt> bounds;
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    const Dyadic& c = ascending[i];
    (c.is_zero_to_precision() ? bounds : known).emplace_back(static_cast<int>(i), c.valuation_lower_bound());
  }
  if (ascending.back().is_zero_to_precision())
    throw PrecisionExhausted("leading coefficient is zero to precision");
  NewtonPolygon np = hull_of(known);
  const auto& hv = np.vertices;
  for (const Pt& b : bounds) {
    if (b.first < hv.front().first)
      throw PrecisionExhausted("coefficient of x^" + std::to_string(b.first) + " has unknown valuation");
    for (std::size_t k = 1; k < hv.size(); ++k) {
      if (b.first > hv[k].first) continue;
      // b must lie on or above the edge hv[k-1] -- hv[k].
      if (cross(hv[k - 1], hv[k], b) < 0)
        throw PrecisionExhausted("coefficient of x^" + std::to_string(b.first) +
                                 " is zero only to precision " + std::to_string(b.second) +
                                 ", below the polygon");
      break;
    }
  }
  return np;
}

NewtonPolygon newton_polygon(const CurveModel& f) {
  std::vector<Pt> pts;
  for (int e = 0; e <= f.degree(); ++e) {
    const DyadicRational c = f.coefficient_of(e);
    if (!c.is_zero()) pts.emplace_back(e, c.valuation());
  }
  return hull_of(pts);
}

// ---------------------------------------------------------------------------

std::string CurvePoint::to_string() const {
  if (at_infinity) return "P_inf";
  return "(" + sym2chab::to_string(x) + "," + sym2chab::to_string(y) + ")";
}

F4 evaluate_mod2(const CurveModel& h, F4 x) {
  const std::vector<bool> bits = h.mod2_ascending();
  F4 acc = F4::Zero;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) acc = acc * x + (*it ? F4::One : F4::Zero);
  return acc;
}

std::vector<CurvePoint> enumerate_points(const CurveModel& h, FiniteField field) {
  if (h.kind() != ModelKind::LongW) throw Error("point enumeration expects a long model");
  std::vector<CurvePoint> pts{{true, F4::Zero, F4::Zero}};
  const int q = field == FiniteField::F2 ? 2 : 4;
  for (int xi = 0; xi < q; ++xi) {
    const F4 x = kF4All[xi];
    const F4 hx = evaluate_mod2(h, x);
    for (int yi = 0; yi < q; ++yi) {
      const F4 y = kF4All[yi];
      if (y * y + y == hx) pts.push_back({false, x, y});
    }
  }
  return pts;
}

CurvePoint involution(const CurvePoint& p) {
  if (p.at_infinity) return p;
  return {false, p.x, p.y + F4::One};
}

namespace {

CurvePoint frobenius(const CurvePoint& p) {
  if (p.at_infinity) return p;
  return {false, sym2chab::frobenius(p.x), sym2chab::frobenius(p.y)};
}

Sym2Class classify(const CurvePoint& p, const CurvePoint& q) {
  Sym2Class c;
  c.first = p;
  c.second = q;
  c.is_hyperelliptic_fiber = involution(p) == q;
  if (p.at_infinity && q.at_infinity)
    c.kind = Sym2Class::Kind::TwoInfinity;
  else if (c.is_hyperelliptic_fiber && in_f2(p.x)) {
    c.kind = Sym2Class::Kind::PairAt;
    c.x0 = p.x;
  }
  return c;
}

}  // namespace

std::string Sym2Class::to_string() const {
  if (kind == Kind::TwoInfinity) return "2P_inf";
  return first.to_string() + "+" + second.to_string();
}

std::vector<Sym2Class> enumerate_sym2_classes(const CurveModel& h) {
  const auto rational = enumerate_points(h, FiniteField::F2);
  std::vector<Sym2Class> out;
  for (std::size_t i = 0; i < rational.size(); ++i)
    for (std::size_t j = i; j < rational.size(); ++j) out.push_back(classify(rational[i], rational[j]));
  // Galois-stable pairs of conjugate F_4 points not defined over F_2, each listed once.
  for (const CurvePoint& p : enumerate_points(h, FiniteField::F4)) {
    const CurvePoint q = frobenius(p);
    if (q == p) continue;
    const auto code = [](const CurvePoint& r) { return static_cast<int>(r.x) * 4 + static_cast<int>(r.y); };
    if (code(p) < code(q)) out.push_back(classify(p, q));
  }
  return out;
}

std::vector<Sym2Class> sym2_classes(const CurveModel& h) {
  if (!is_good(h).good) throw NotGood("h = " + h.polynomial_string() + " is not good");
  return enumerate_sym2_classes(h);
}

bool torsion_condition_holds(const std::vector<Sym2Class>& classes) {
  return classes.size() == 3 &&
         std::all_of(classes.begin(), classes.end(), [](const Sym2Class& c) { return c.is_hyperelliptic_fiber; });
}

}  // namespace sym2chab
