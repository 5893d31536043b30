#include "sym2chab/chabauty.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace sym2chab {

std::string to_string(DiskId id) {
  switch (id) {
    case DiskId::Infinity: return "infinity";
    case DiskId::ZeroPair: return "zero-pair";
    case DiskId::OnePair: return "one-pair";
  }
  return "?";
}

bool tail_gap_holds(HalfVal floor, int i) {
  // i * floor > log2(i + 1)  <=>  2^{i * halves} > (i + 1)^2
  const BigInt lhs = BigInt(1) << static_cast<unsigned>(i * floor.halves());
  const BigInt base = i + 1;
  return lhs > base * base;
}

bool tail_monotone_from(HalfVal floor, int i) {
  // floor > log2((i+2)/(i+1)); the right side decreases in i, so one check covers all larger i.
  const BigInt lhs = (BigInt(1) << static_cast<unsigned>(floor.halves())) * BigInt(i + 1) * BigInt(i + 1);
  return lhs > BigInt(i + 2) * BigInt(i + 2);
}

namespace {

void require_good(const CurveModel& h) {
  const auto report = is_good(h);
  if (!report.good) throw NotGood("h = " + h.polynomial_string() + " is not good");
}

void require_truncation(int T) {
  if (T < kMinCertificateTruncation)
    throw CertificateFailure("truncation " + std::to_string(T) + " is below the minimum " +
                             std::to_string(kMinCertificateTruncation));
}

F2Vec unit_vector_sum(int g, std::initializer_list<int> coords) {
  F2Vec v(static_cast<std::size_t>(g));
  for (int c : coords) v.flip(static_cast<std::size_t>(c));
  return v;
}

std::vector<std::pair<int, int>> allowed_survivors(DiskId disk) {
  if (disk == DiskId::Infinity) return {{1, 0}};
  return {{1, 0}, {2, 1}};
}

std::vector<ProjPtF2> expected_image(DiskId disk, int g) {
  if (disk == DiskId::Infinity) return {projectivize(unit_vector_sum(g, {0}))};
  return {projectivize(unit_vector_sum(g, {0})), projectivize(unit_vector_sum(g, {0, 1}))};
}

std::string describe(const TermBound& t) {
  return "component " + std::to_string(t.component) + ", term " + std::to_string(t.index) + ": v(c) " +
         (t.coeff_exact ? "= " : ">= ") + std::to_string(t.coeff_valuation) + ", v(i+1) = " +
         std::to_string(t.denominator_valuation) + ", net bound " + t.net.to_string();
}

// Fills the term log for normalized integrands and checks every bound against the allowed survivors.
template <class C>
void bound_terms(DiskCertificate& cert, const std::vector<TruncSeries<C>>& integrands) {
  const auto allowed = allowed_survivors(cert.disk);
  for (int j = 1; j <= cert.genus; ++j) {
    const auto& f = integrands[static_cast<std::size_t>(j - 1)];
    for (int i = 0; i <= cert.truncation; ++i) {
      TermBound t;
      t.component = j;
      t.index = i;
      t.coeff_exact = !f[i].is_zero_to_precision();
      t.coeff_valuation = f[i].valuation_lower_bound();
      t.denominator_valuation = two_adic_valuation(i + 1);
      t.net = HalfVal(t.coeff_valuation) - HalfVal(t.denominator_valuation) + i * cert.floor;
      const bool may_survive = std::find(allowed.begin(), allowed.end(), std::make_pair(j, i)) != allowed.end();
      if (t.net < HalfVal(0) || (t.net == HalfVal(0) && (!may_survive || !t.coeff_exact)))
        throw CertificateFailure(to_string(cert.disk) + " disk: " + describe(t));
      t.survivor = t.net == HalfVal(0);
      if (t.survivor) cert.survivors.emplace_back(j, i);
      cert.terms.push_back(t);
    }
  }
  if (cert.survivors != allowed)
    throw CertificateFailure(to_string(cert.disk) + " disk: expected mod-2-visible terms are missing");
}

void check_tail(DiskCertificate& cert) {
  cert.tail.threshold = cert.truncation;
  cert.tail.floor = cert.floor;
  cert.tail.gap_ok = tail_gap_holds(cert.floor, cert.truncation + 1);
  cert.tail.monotone_ok = tail_monotone_from(cert.floor, cert.truncation + 1);
  if (!cert.tail.holds())
    throw CertificateFailure(to_string(cert.disk) + " disk: tail lemma fails beyond " +
                             std::to_string(cert.truncation));
}

int residue_bit(const Dyadic& x) {
  if (x.valuation_lower_bound() < 0) throw CertificateFailure("witness coordinate is not integral");
  return x.parity();
}

int residue_bit(const QuadDyadic& x) {
  if (x.valuation_lower_bound() < 0) throw CertificateFailure("witness coordinate is not integral");
  const unsigned bits = x.residue_bits();
  if (bits > 1) throw CertificateFailure("witness coordinate does not reduce into F_2");
  return static_cast<int>(bits);
}

// log(P + Q - 2P_inf) / (u1 - u2) componentwise, divided by its first coordinate and reduced mod 2.
template <class C>
F2Vec witness_point(const std::vector<TruncSeries<C>>& integrands, const C& u1, const C& u2) {
  std::vector<C> comps;
  for (const auto& f : integrands) comps.push_back(diff_quotient(integrate(f)).evaluate(u1, u2));
  if (!comps[0].is_unit()) throw CertificateFailure("witness: first log coordinate is not a unit");
  F2Vec v(comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) v.set(j, residue_bit(comps[j] / comps[0]) != 0);
  return v;
}

void check_witnesses(const DiskCertificate& cert) {
  std::set<F2Vec> realized;
  for (const auto& w : cert.witnesses) realized.insert(w.point);
  std::set<F2Vec> wanted;
  for (const auto& p : cert.image) wanted.insert(p.coords());
  if (realized != wanted)
    throw CertificateFailure(to_string(cert.disk) + " disk: witnesses do not realize the image");
}

}  // namespace

DiskCertificate certify_disk_infinity(const CurveModel& h, int T, std::int64_t precision) {
  require_good(h);
  require_truncation(T);
  DiskCertificate cert;
  cert.disk = DiskId::Infinity;
  cert.genus = h.genus();
  cert.floor = HalfVal(1, 2);  // t lies in the maximal ideal of an extension of ramification index <= 2
  cert.truncation = T;
  const auto omega = omega_basis_at_infinity(h, T, precision);
  bound_terms(cert, omega);
  check_tail(cert);
  cert.image = expected_image(cert.disk, cert.genus);
  const Dyadic t1 = Dyadic::from_integer(2, precision);
  const Dyadic t3 = Dyadic::from_integer(4, precision);
  cert.witnesses.push_back({"t1 = 2, t3 = 4", witness_point(omega, t1, t3)});
  check_witnesses(cert);
  return cert;
}

DiskCertificate certify_disk_pair(const CurveModel& h, int x0, int T, std::int64_t precision) {
  if (x0 != 0 && x0 != 1) throw DimensionMismatch("pair disks sit above x0 = 0 or x0 = 1");
  require_good(h);
  require_truncation(T);
  DiskCertificate cert;
  cert.disk = x0 == 0 ? DiskId::ZeroPair : DiskId::OnePair;
  cert.genus = h.genus();
  cert.floor = HalfVal(1);  // x lies in 2 O_K with K = Q_4 unramified
  cert.truncation = T;

  const CurveModel centered = x0 == 0 ? h : translate(h, DyadicRational(1));
  const QuadDyadic gamma = hensel_artin_schreier(centered.ascending_dyadic(precision)[0], precision);
  auto eta = eta_basis_at_disk(centered, 0, gamma, T);
  const QuadDyadic u = eta[0][0];
  if (!u.is_unit()) throw CertificateFailure("pair disk: constant term of eta_1/dx is not a unit");
  for (auto& e : eta) e = e * u.inverse();
  bound_terms(cert, eta);
  // (x1 + x2)/2 runs over all of Z_2 mod 2 only if its coefficient is 1 mod 2.
  if (residue_bit(eta[1][1]) != 1)
    throw CertificateFailure("pair disk: coefficient of the (2, 1) term is not 1 mod 2");
  check_tail(cert);
  cert.image = expected_image(cert.disk, cert.genus);

  const QuadDyadic w = QuadDyadic::w(precision);
  for (long long k : {4LL, 2LL}) {
    const QuadDyadic x1 = w * Dyadic::from_integer(k, precision);
    cert.witnesses.push_back({"x1 = " + std::to_string(k) + "w, x2 = conj(x1)", witness_point(eta, x1, x1.conj())});
  }
  check_witnesses(cert);
  return cert;
}

RecheckResult recheck(const DiskCertificate& cert) {
  auto reject = [](std::string why) { return RecheckResult{false, std::move(why)}; };
  const int g = cert.genus;
  if (g < 2) return reject("genus below 2");
  const std::int64_t floor_halves = cert.disk == DiskId::Infinity ? 1 : 2;
  if (cert.floor.halves() != floor_halves) return reject("wrong variable floor for this disk");
  if (cert.truncation < kMinCertificateTruncation) return reject("truncation below minimum");

  const std::size_t expected_terms = static_cast<std::size_t>(g) * static_cast<std::size_t>(cert.truncation + 1);
  if (cert.terms.size() != expected_terms) return reject("term log is incomplete");
  std::vector<std::pair<int, int>> survivors;
  std::size_t k = 0;
  for (int j = 1; j <= g; ++j) {
    for (int i = 0; i <= cert.truncation; ++i, ++k) {
      const TermBound& t = cert.terms[k];
      if (t.component != j || t.index != i) return reject("term log out of order");
      int den = 0;
      for (int n = i + 1; n % 2 == 0; n /= 2) ++den;
      if (t.denominator_valuation != den) return reject("wrong denominator valuation at " + std::to_string(i));
      const std::int64_t net = 2 * t.coeff_valuation - 2 * den + i * floor_halves;
      if (net != t.net.halves()) return reject("net bound does not match its inputs");
      if (net < 0) return reject("negative net bound");
      if ((net == 0) != t.survivor) return reject("survivor flag disagrees with net bound");
      if (net == 0) {
        if (!t.coeff_exact) return reject("survivor with an unknown coefficient");
        survivors.emplace_back(j, i);
      }
    }
  }
  const std::vector<std::pair<int, int>> allowed =
      cert.disk == DiskId::Infinity ? std::vector<std::pair<int, int>>{{1, 0}}
                                    : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}};
  if (survivors != allowed || cert.survivors != allowed) return reject("unexpected surviving terms");

  // Tail: v(i+1) < bit_width(i+1), and log2(1 + 1/(i+1)) < 1/((i+1) ln 2) < 3/(2(i+1)).
  const int i0 = cert.truncation + 1;
  if (cert.tail.threshold != cert.truncation) return reject("tail threshold differs from truncation");
  if (!(i0 * floor_halves >= 2 * static_cast<std::int64_t>(std::bit_width(static_cast<unsigned>(i0 + 1)))))
    return reject("tail gap not established");
  if (!(floor_halves * (i0 + 1) >= 3)) return reject("tail monotonicity not established");
  if (!cert.tail.gap_ok || !cert.tail.monotone_ok) return reject("tail verdict recorded as failing");

  std::set<F2Vec> image;
  for (const auto& p : cert.image) image.insert(p.coords());
  std::set<F2Vec> expected;
  F2Vec e1(static_cast<std::size_t>(g));
  e1.set(0, true);
  expected.insert(e1);
  if (cert.disk != DiskId::Infinity) {
    F2Vec e12 = e1;
    e12.set(1, true);
    expected.insert(e12);
  }
  if (image != expected) return reject("image does not follow from the surviving terms");
  std::set<F2Vec> realized;
  for (const auto& w : cert.witnesses) realized.insert(w.point);
  if (realized != expected) return reject("witnesses do not cover the image");
  return {true, "ok"};
}

MatF2 pascal_mod2(int g) {
  MatF2 q(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j)
    for (int k = 0; k <= j; ++k)
      if ((k & ~j) == 0) q.set(static_cast<std::size_t>(j), static_cast<std::size_t>(k), true);  // Lucas
  return q;
}

bool RhoLogImage::contains(const ProjPtF2& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

RhoLogImage assemble_rholog(const CurveModel& h, int T, std::int64_t precision) {
  RhoLogImage out;
  out.genus = h.genus();
  out.infinity = certify_disk_infinity(h, T, precision);
  out.zero_pair = certify_disk_pair(h, 0, T, precision);
  out.one_pair = certify_disk_pair(h, 1, T, precision);
  const auto change = basis_change_matrix(h, std::max(T, 2 * h.genus() + 2), precision);
  if (!change.det_odd) throw CertificateFailure("basis change matrix is singular mod 2");
  out.basis_change_mod2 = change.mod2;
  const MatF2 shifted = change.mod2 * pascal_mod2(h.genus());

  std::set<ProjPtF2> points(out.infinity.image.begin(), out.infinity.image.end());
  for (const auto& p : out.zero_pair.image) points.insert(projectivize(change.mod2 * p.coords()));
  for (const auto& p : out.one_pair.image) points.insert(projectivize(shifted * p.coords()));
  out.points.assign(points.begin(), points.end());
  return out;
}

// ---------------------------------------------------------------------------

SelmerInput parse_selmer(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int g = 0;
  long long r = 0;
  std::vector<F2Vec> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      std::string second, extra;
      if (!(fields >> second) || (fields >> extra)) throw ParseError("expected header 'g r'", line_no);
      try {
        std::size_t p1 = 0, p2 = 0;
        g = std::stoi(first, &p1);
        r = std::stoll(second, &p2);
        if (p1 != first.size() || p2 != second.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("expected header 'g r'", line_no);
      }
      if (g < 1 || r < 0) throw ParseError("genus must be positive and rank non-negative", line_no);
      if (r > 2LL * g) throw DimensionMismatch("rank " + std::to_string(r) + " exceeds 2g = " + std::to_string(2 * g));
      have_header = true;
      continue;
    }
    std::string extra;
    if (fields >> extra) throw ParseError("expected a single bit string", line_no);
    if (static_cast<long long>(rows.size()) == r) throw ParseError("more rows than the declared rank", line_no);
    F2Vec v;
    try {
      v = F2Vec::parse(first);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (v.size() != static_cast<std::size_t>(g))
      throw ParseError("row has " + std::to_string(v.size()) + " bits, expected " + std::to_string(g), line_no);
    rows.push_back(std::move(v));
  }
  if (!have_header) throw ParseError("missing header 'g r'");
  if (static_cast<long long>(rows.size()) != r)
    throw ParseError("expected " + std::to_string(r) + " rows, found " + std::to_string(rows.size()), line_no);
  SelmerInput sel;
  sel.genus = g;
  sel.rows = MatF2::from_rows(static_cast<std::size_t>(g), std::move(rows));
  return sel;
}

SelmerInput parse_selmer(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_selmer(in);
}

SelmerInput load_selmer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Selmer file '" + path + "'");
  return parse_selmer(in);
}

CriterionVerdict criterion(int genus, const std::vector<ProjPtF2>& image_points, const SelmerInput& sel,
                           bool torsion_ok) {
  if (sel.genus != genus || sel.rows.cols() != static_cast<std::size_t>(genus))
    throw DimensionMismatch("Selmer data has genus " + std::to_string(sel.genus) + ", image has genus " +
                            std::to_string(genus));
  if (sel.rank() > kMaxCriterionRank)
    throw RankTooLarge("row-space enumeration refused for rank " + std::to_string(sel.rank()));
  std::set<F2Vec> image;
  for (const auto& p : image_points) {
    if (p.dimension() != static_cast<std::size_t>(genus)) throw DimensionMismatch("image point of wrong length");
    image.insert(p.coords());
  }
  CriterionVerdict v;
  v.torsion_ok = torsion_ok;
  v.sigma_injective = rank_and_injectivity(sel.rows).injective;
  v.disjoint = true;
  for_each_row_combination(sel.rows, [&](const F2Vec& combo, std::uint64_t) {
    if (!v.disjoint || combo.is_zero()) return;
    if (image.count(combo)) {
      v.disjoint = false;
      v.witness = projectivize(combo);
    }
  });
  v.overall = v.sigma_injective && v.disjoint && v.torsion_ok;
  return v;
}

CriterionVerdict criterion(const RhoLogImage& image, const SelmerInput& sel, bool torsion_ok) {
  return criterion(image.genus, image.points, sel, torsion_ok);
}

}  // namespace sym2chab
