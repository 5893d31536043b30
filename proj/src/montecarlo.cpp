#include "sym2chab/montecarlo.hpp"

#include <cmath>
#include <random>
#include <thread>

namespace sym2chab {

std::vector<double> RankModel::probabilities() const {
  if (kind == Kind::Fixed) {
    if (fixed_rank < 0) throw DimensionMismatch("rank must be non-negative");
    std::vector<double> p(static_cast<std::size_t>(fixed_rank + 1), 0.0);
    p.back() = 1.0;
    return p;
  }
  std::vector<double> p{1.0};
  for (int r = 1; r <= max_rank; ++r) p.push_back(p.back() * 2.0 / (std::ldexp(1.0, r) - 1.0));
  double total = 0.0;
  for (double x : p) total += x;
  for (double& x : p) x /= total;
  return p;
}

double RankModel::mean_nonzero_elements() const {
  const auto p = probabilities();
  double mean = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) mean += p[r] * (std::ldexp(1.0, static_cast<int>(r)) - 1.0);
  return mean;
}

std::string RankModel::describe() const {
  if (kind == Kind::Fixed) return "fixed rank " + std::to_string(fixed_rank);
  return "Poonen-Rains, P(r) ~ prod_{j<=r} 2/(2^j-1), r <= " + std::to_string(max_rank);
}

DyadicRational counting_floor(int genus, std::size_t image_cardinality) {
  return DyadicRational(1) -
         DyadicRational(static_cast<long long>(image_cardinality + 1)) * DyadicRational::power_of_two(1 - genus);
}

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

int sample_rank(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  for (std::size_t r = 0; r < cumulative.size(); ++r)
    if (u < cumulative[r]) return static_cast<int>(r);
  return static_cast<int>(cumulative.size()) - 1;
}

std::vector<double> cumulative_of(const RankModel& model) {
  auto p = model.probabilities();
  for (std::size_t r = 1; r < p.size(); ++r) p[r] += p[r - 1];
  return p;
}

SelmerInput sample_with(int g, const std::vector<double>& cumulative, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_engine(seed, trial);
  const int r = sample_rank(cumulative, rng);
  SelmerInput sel;
  sel.genus = g;
  sel.rows = MatF2(0, static_cast<std::size_t>(g));
  for (int k = 0; k < r; ++k) {
    F2Vec v(static_cast<std::size_t>(g));
    while (v.is_zero())
      for (int i = 0; i < g; ++i)
        if (rng() & 1U) v.flip(static_cast<std::size_t>(i));
    sel.rows.append_row(v);
  }
  return sel;
}

}  // namespace

SelmerInput sample_selmer(const SimConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  return sample_with(cfg.genus, cumulative_of(cfg.rank_model), seed, trial);
}

SimReport run_trials(const SimConfig& cfg, const std::vector<ProjPtF2>& image) {
  if (cfg.genus < 2) throw GenusTooSmall("genus must be at least 2");
  for (const auto& p : image)
    if (p.dimension() != static_cast<std::size_t>(cfg.genus)) throw DimensionMismatch("image genus differs");
  if (!cfg.seed && cfg.strict) throw SeedMissing("a seed is required for reproducible runs");
  if (cfg.trials == 0) throw DimensionMismatch("at least one trial is required");
  const std::uint64_t seed = cfg.seed ? *cfg.seed : std::random_device{}();

  const auto cumulative = cumulative_of(cfg.rank_model);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  std::vector<std::uint64_t> passes(workers, 0);
  auto work = [&](unsigned w) {
    for (std::uint64_t k = w; k < cfg.trials; k += workers) {
      const auto sel = sample_with(cfg.genus, cumulative, seed, k);
      if (criterion(cfg.genus, image, sel, true).overall) ++passes[w];
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  SimReport rep;
  rep.genus = cfg.genus;
  rep.trials = cfg.trials;
  rep.seed = seed;
  for (auto p : passes) rep.passes += p;
  rep.proportion = static_cast<double>(rep.passes) / static_cast<double>(cfg.trials);
  rep.sigma = std::sqrt(rep.proportion * (1.0 - rep.proportion) / static_cast<double>(cfg.trials));
  rep.half_width = 1.96 * rep.sigma;
  rep.image_cardinality = image.size();
  rep.preimage_size = image.size() + 1;
  rep.floor = counting_floor(cfg.genus, image.size());
  rep.rank_model = cfg.rank_model.describe();
  return rep;
}

SimReport run_trials(const SimConfig& cfg, const RhoLogImage& image) {
  if (image.genus != cfg.genus) throw DimensionMismatch("image genus differs from the configured genus");
  return run_trials(cfg, image.points);
}

}  // namespace sym2chab
