#include "dpp/sampler.hpp"

#include "dpp/error.hpp"
#include "dpp/parallel.hpp"

#include <cmath>
#include <vector>

namespace dpp {

namespace {

constexpr double kEigenSnap = 1e-12;
constexpr double kRankDrift = 1e-6;

/// Rebuilds P as the orthogonal projector onto the span of its leading
/// `rank` pivoted columns.
void reorthogonalize(Matrix &p, Eigen::Index rank) {
  Eigen::ColPivHouseholderQR<Matrix> qr(p);
  Matrix q = qr.householderQ() * Matrix::Identity(p.rows(), rank);
  p = q * q.adjoint();
}

} // namespace

std::vector<std::uint64_t> Histogram::cardinality_counts() const {
  std::vector<std::uint64_t> out(n + 1, 0);
  for (const auto &[subset, count] : counts)
    out[subset.size()] += count;
  return out;
}

Subset sample_once(const SpectralDecomposition &spec, Rng &rng) {
  const int n = spec.n();
  std::vector<Eigen::Index> active;
  for (int j = 0; j < n; ++j) {
    const double lambda = spec.eigenvalues[j];
    if (lambda < kEigenSnap)
      continue;
    if (lambda > 1.0 - kEigenSnap || rng.uniform() < lambda)
      active.push_back(j);
  }
  if (active.empty())
    return {};

  Matrix basis(n, static_cast<Eigen::Index>(active.size()));
  for (std::size_t c = 0; c < active.size(); ++c)
    basis.col(c) = spec.eigenvectors.col(active[c]);
  Matrix p = basis * basis.adjoint();

  std::vector<int> points;
  points.reserve(active.size());
  RealVector mass(n);
  bool retried = false;
  for (auto remaining = static_cast<Eigen::Index>(active.size()); remaining > 0; --remaining) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      mass[i] = std::max(p(i, i).real(), 0.0);
      total += mass[i];
    }
    if (std::abs(total - static_cast<double>(remaining)) > kRankDrift) {
      if (retried)
        throw Error(ErrorCode::NumericalBreakdown,
                    "projection diagonal sums to " + std::to_string(total) + ", expected " +
                        std::to_string(remaining));
      retried = true;
      reorthogonalize(p, remaining);
      ++remaining;
      continue;
    }

    const double target = rng.uniform() * total;
    int chosen = -1;
    double cumulative = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mass[i] <= 0.0)
        continue;
      chosen = i;
      cumulative += mass[i];
      if (target < cumulative)
        break;
    }
    points.push_back(chosen);

    // Condition on the chosen point: Schur complement of the (chosen, chosen)
    // entry, which is again a projection of rank one less.
    const Vector column = p.col(chosen);
    p.noalias() -= column * column.adjoint() / column[chosen].real();
    p.row(chosen).setZero();
    p.col(chosen).setZero();
  }
  return Subset(std::move(points));
}

Histogram sample_batch(const SpectralDecomposition &spec, std::uint64_t count,
                       const SamplerConfig &config) {
  if (count == 0)
    throw Error(ErrorCode::InvalidArgument, "draw count must be at least 1");
  const int workers = worker_count(config.threads);
  const std::size_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count);
  std::vector<std::map<Subset, std::uint64_t>> partial(chunks);
  const std::uint64_t per_chunk = (count + chunks - 1) / chunks;

  parallel_for(
      chunks,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          const std::uint64_t first = c * per_chunk;
          const std::uint64_t last = std::min(count, first + per_chunk);
          for (std::uint64_t i = first; i < last; ++i) {
            Rng rng = Rng::for_replicate(config.seed, i);
            ++partial[c][sample_once(spec, rng)];
          }
        }
      },
      workers);

  Histogram out{spec.n(), count, config.seed, {}};
  for (const auto &local : partial)
    for (const auto &[subset, c] : local)
      out.counts[subset] += c;
  return out;
}

double empirical_tv_distance(const Histogram &histogram, const ExactPmf &pmf) {
  if (histogram.n != pmf.n())
    throw Error(ErrorCode::DimensionMismatch, "histogram and pmf ground sets differ");
  if (histogram.draws == 0)
    throw Error(ErrorCode::InvalidArgument, "empty histogram");
  std::vector<double> freq(pmf.by_mask().size(), 0.0);
  for (const auto &[subset, c] : histogram.counts) {
    subset.check_range(pmf.n());
    freq[subset.mask()] += static_cast<double>(c) / static_cast<double>(histogram.draws);
  }
  double sum = 0.0;
  for (std::size_t mask = 0; mask < freq.size(); ++mask)
    sum += std::abs(freq[mask] - pmf.at_mask(mask));
  return 0.5 * sum;
}

double empirical_tv_distance(const Histogram &a, const Histogram &b) {
  if (a.n != b.n)
    throw Error(ErrorCode::DimensionMismatch, "histogram ground sets differ");
  if (a.draws == 0 || b.draws == 0)
    throw Error(ErrorCode::InvalidArgument, "empty histogram");
  std::map<Subset, double> diff;
  for (const auto &[s, c] : a.counts)
    diff[s] += static_cast<double>(c) / static_cast<double>(a.draws);
  for (const auto &[s, c] : b.counts)
    diff[s] -= static_cast<double>(c) / static_cast<double>(b.draws);
  double sum = 0.0;
  for (const auto &[s, d] : diff)
    sum += std::abs(d);
  return 0.5 * sum;
}

} // namespace dpp
