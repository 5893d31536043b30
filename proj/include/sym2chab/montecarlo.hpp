#pragma once

// Sampling model for the Selmer step: draw sigma-images of random Selmer groups, run the criterion,
// and compare the pass rate with the counting floor 1 - #I * 2^{1-g}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sym2chab/chabauty.hpp"
#include "sym2chab/dyadic_rational.hpp"
#include "sym2chab/modp.hpp"

namespace sym2chab {

inline constexpr const char* kHeuristicLabel = "heuristic model, not the Bhargava-Gross theorem";

struct RankModel {
  enum class Kind { PoonenRains, Fixed };
  Kind kind = Kind::PoonenRains;
  int fixed_rank = 0;
  /// Support of the Poonen-Rains law is cut at this rank and renormalized.
  int max_rank = 20;

  static RankModel poonen_rains() { return {}; }
  static RankModel fixed(int r) { return {Kind::Fixed, r, r}; }

  /// P(r) for r = 0..max_rank. Poonen-Rains: P(r) proportional to prod_{j=1}^{r} 2/(2^j - 1).
  std::vector<double> probabilities() const;
  /// E[2^r - 1], the mean number of nonzero Selmer elements.
  double mean_nonzero_elements() const;
  std::string describe() const;
};

struct SimConfig {
  int genus = 4;
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  RankModel rank_model;
  /// 0 means one worker per hardware thread.
  unsigned threads = 0;
  /// Refuse to run without an explicit seed.
  bool strict = true;
};

struct SimReport {
  int genus = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t passes = 0;
  double proportion = 0.0;
  /// sqrt(p(1-p)/n).
  double sigma = 0.0;
  /// 1.96 sigma.
  double half_width = 0.0;
  std::size_t image_cardinality = 0;
  /// #I = image cardinality + 1 (the preimage of the image together with 0).
  std::size_t preimage_size = 0;
  DyadicRational floor;
  std::string rank_model;
  std::string label = kHeuristicLabel;
};

/// 1 - #I * 2^{1-g}.
DyadicRational counting_floor(int genus, std::size_t image_cardinality);

/// Sigma-image of one trial: r rows drawn independently and uniformly from F_2^g minus 0.
SelmerInput sample_selmer(const SimConfig& cfg, std::uint64_t seed, std::uint64_t trial);

/// Throws SeedMissing when strict and no seed is given, DimensionMismatch on genus mismatch.
SimReport run_trials(const SimConfig& cfg, const std::vector<ProjPtF2>& image);
SimReport run_trials(const SimConfig& cfg, const RhoLogImage& image);

}  // namespace sym2chab
