#ifndef DPP_SAMPLER_HPP
#define DPP_SAMPLER_HPP

#include "dpp/kernel.hpp"
#include "dpp/measure.hpp"
#include "dpp/rng.hpp"
#include "dpp/subset.hpp"

#include <cstdint>
#include <map>

namespace dpp {

struct SamplerConfig {
  std::uint64_t seed = 0;
  /// 0 means worker_count() decides (DPP_THREADS or hardware).
  int threads = 0;
};

/// Draw counts keyed by sampled subset.
struct Histogram {
  int n = 0;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::map<Subset, std::uint64_t> counts;

  /// Histogram of |X| over 0..n.
  std::vector<std::uint64_t> cardinality_counts() const;
};

/// One exact draw from the DPP with the given eigendecomposition.
///
/// Eigenvector j is kept independently with probability lambda_j, then the
/// projection DPP on the kept span is sampled point by point, conditioning
/// the projection kernel with a Schur-complement update after each point.
Subset sample_once(const SpectralDecomposition &spec, Rng &rng);

/// `count` independent draws; draw i uses Rng::for_replicate(seed, i), so the
/// histogram depends only on (spec, count, seed).
Histogram sample_batch(const SpectralDecomposition &spec, std::uint64_t count,
                       const SamplerConfig &config);

/// 1/2 sum_S |freq(S) - pmf(S)|.
double empirical_tv_distance(const Histogram &histogram, const ExactPmf &pmf);

/// Total variation between two histograms' empirical frequencies.
double empirical_tv_distance(const Histogram &a, const Histogram &b);

} // namespace dpp

#endif // DPP_SAMPLER_HPP
