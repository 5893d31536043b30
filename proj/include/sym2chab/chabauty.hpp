#pragma once

// Certified rho∘log on the three residue polydisks of Sym^2 for a good h, assembly of the image
// in P^{g-1}(F_2), and the Selmer criterion.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sym2chab/curves.hpp"
#include "sym2chab/dyadic.hpp"
#include "sym2chab/modp.hpp"
#include "sym2chab/series.hpp"

namespace sym2chab {

enum class DiskId { Infinity, ZeroPair, OnePair };

std::string to_string(DiskId id);

/// One term c/(i+1) * h_i(u1, u2) of component j after dividing by u1 - u2.
struct TermBound {
  int component = 0;
  int index = 0;
  /// v(c), or a lower bound when c is zero to the working precision.
  std::int64_t coeff_valuation = 0;
  bool coeff_exact = true;
  std::int64_t denominator_valuation = 0;
  /// v(c) - v(i+1) + i * floor.
  HalfVal net;
  bool survivor = false;
};

/// Every term beyond the explicit range has integral c, so its bound is at least i*floor - log2(i+1).
/// gap_ok: that quantity is positive at i = threshold + 1. monotone_ok: it increases from there on.
struct TailLemma {
  int threshold = 0;
  HalfVal floor;
  bool gap_ok = false;
  bool monotone_ok = false;
  bool holds() const { return gap_ok && monotone_ok; }
};

/// A concrete point of the polydisk and the image it realizes.
struct Witness {
  std::string description;
  /// The normalized log vector reduced mod 2.
  F2Vec point;
};

struct DiskCertificate {
  DiskId disk = DiskId::Infinity;
  int genus = 0;
  HalfVal floor;
  int truncation = 0;
  std::vector<TermBound> terms;
  std::vector<std::pair<int, int>> survivors;  // (component, index)
  TailLemma tail;
  /// In the omega basis for Infinity, in the disk's own eta basis for the pair disks.
  std::vector<ProjPtF2> image;
  std::vector<Witness> witnesses;
};

/// Lowest truncation order accepted by the certifiers.
inline constexpr int kMinCertificateTruncation = 8;

/// Tail checks in exact integer arithmetic.
bool tail_gap_holds(HalfVal floor, int i);
bool tail_monotone_from(HalfVal floor, int i);

/// The polydisk over 2P_inf. Throws NotGood, or CertificateFailure naming the first bad term.
DiskCertificate certify_disk_infinity(const CurveModel& h, int T, std::int64_t precision = kDefaultPrecision);

/// The polydisk over (x0, alpha) + (x0, alpha + 1), x0 in {0, 1}; x0 = 1 runs on h(x + 1).
DiskCertificate certify_disk_pair(const CurveModel& h, int x0, int T, std::int64_t precision = kDefaultPrecision);

struct RecheckResult {
  bool accepted = false;
  std::string reason;
};

/// Re-derives every verdict in a certificate from its stored valuations alone.
RecheckResult recheck(const DiskCertificate& cert);

/// C(j-1, k-1) mod 2: expresses eta_j = x^{j-1} eta_1 through (x-1)^{k-1} eta_1.
MatF2 pascal_mod2(int g);

struct RhoLogImage {
  int genus = 0;
  DiskCertificate infinity;
  DiskCertificate zero_pair;
  DiskCertificate one_pair;
  MatF2 basis_change_mod2;
  /// Sorted, without repeats, in the omega basis.
  std::vector<ProjPtF2> points;
  std::size_t cardinality() const { return points.size(); }
  bool contains(const ProjPtF2& p) const;
};

RhoLogImage assemble_rholog(const CurveModel& h, int T, std::int64_t precision = kDefaultPrecision);

// ---------------------------------------------------------------------------
// Selmer criterion

struct SelmerInput {
  int genus = 0;
  /// r x g; row k is sigma of the k-th Selmer basis element.
  MatF2 rows;
  std::size_t rank() const { return rows.rows(); }
};

/// "g r" then r lines of g bits. Blank lines and '#' comments are skipped. Throws ParseError
/// (with the line number) or DimensionMismatch when r > 2g.
SelmerInput parse_selmer(std::istream& in);
SelmerInput parse_selmer(std::string_view text);
SelmerInput load_selmer_file(const std::string& path);

inline constexpr std::size_t kMaxCriterionRank = 20;

struct CriterionVerdict {
  bool sigma_injective = false;
  bool disjoint = false;
  bool torsion_ok = false;
  bool overall = false;
  std::optional<ProjPtF2> witness;
};

/// image_points must be in the omega basis of the given genus.
CriterionVerdict criterion(int genus, const std::vector<ProjPtF2>& image_points, const SelmerInput& sel,
                           bool torsion_ok);
CriterionVerdict criterion(const RhoLogImage& image, const SelmerInput& sel, bool torsion_ok);

}  // namespace sym2chab
