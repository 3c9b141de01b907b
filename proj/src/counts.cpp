#include "dpp/counts.hpp"

#include "dpp/error.hpp"
#include "dpp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dpp {

PoissonBinomial poisson_binomial_pmf(std::vector<double> lambdas) {
  for (double l : lambdas)
    if (!(l >= 0.0 && l <= 1.0))
      throw Error(ErrorCode::OutOfRange,
                  "success probability " + std::to_string(l) + " outside [0, 1]");

  std::vector<double> order = lambdas;
  std::sort(order.begin(), order.end());
  std::vector<double> pmf(lambdas.size() + 1, 0.0);
  pmf[0] = 1.0;
  // Multiply by (1 - l + l z) one factor at a time; each coefficient update
  // is a single fused multiply-add.
  for (std::size_t j = 0; j < order.size(); ++j) {
    const double l = order[j];
    for (std::size_t k = j + 1; k > 0; --k)
      pmf[k] = std::fma(pmf[k], 1.0 - l, pmf[k - 1] * l);
    pmf[0] *= 1.0 - l;
  }
  return {std::move(lambdas), std::move(pmf)};
}

PoissonBinomial count_distribution(const HermitianKernel &k, const Subset &e) {
  e.check_range(k.n());
  if (e.empty())
    return poisson_binomial_pmf({});
  RealVector eig = linalg::hermitian_eigenvalues(linalg::principal(k.matrix(), e));
  std::vector<double> lambdas(eig.size());
  // Descending, clipped into [0, 1].
  for (Eigen::Index i = 0; i < eig.size(); ++i)
    lambdas[i] = std::clamp(eig[eig.size() - 1 - i], 0.0, 1.0);
  return poisson_binomial_pmf(std::move(lambdas));
}

CountMoments count_moments(const PoissonBinomial &pb) {
  CountMoments out;
  for (double l : pb.lambdas) {
    out.mean += l;
    out.variance += l * (1.0 - l);
  }
  return out;
}

CountMoments pmf_moments(const std::vector<double> &pmf) {
  CountMoments out;
  for (std::size_t k = 0; k < pmf.size(); ++k)
    out.mean += static_cast<double>(k) * pmf[k];
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    const double d = static_cast<double>(k) - out.mean;
    out.variance += d * d * pmf[k];
  }
  return out;
}

double standardized_count(double count, int n, double mean) {
  if (n < 2)
    throw Error(ErrorCode::OutOfRange, "standardization needs n >= 2");
  return (count - mean) * std::numbers::pi / std::sqrt(std::log(static_cast<double>(n)));
}

double tv_distance(const std::vector<double> &p, const std::vector<double> &q) {
  const std::size_t size = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

} // namespace dpp
