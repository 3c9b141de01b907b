#ifndef DPP_COUNTS_HPP
#define DPP_COUNTS_HPP

#include "dpp/kernel.hpp"
#include "dpp/subset.hpp"

#include <vector>

namespace dpp {

/// Law of a sum of independent Bernoulli(lambda_j) variables.
struct PoissonBinomial {
  std::vector<double> lambdas;
  std::vector<double> pmf; // length lambdas.size() + 1
};

struct CountMoments {
  double mean = 0.0;
  double variance = 0.0;
};

PoissonBinomial poisson_binomial_pmf(std::vector<double> lambdas);

/// Law of #(X ∩ E): Poisson-binomial in the eigenvalues of K_E.
PoissonBinomial count_distribution(const HermitianKernel &k, const Subset &e);

/// Closed-form moments from the success probabilities.
CountMoments count_moments(const PoissonBinomial &pb);

/// Moments recomputed from the pmf vector.
CountMoments pmf_moments(const std::vector<double> &pmf);

/// (count - mean) * pi / sqrt(ln n).
double standardized_count(double count, int n, double mean);

/// 1/2 sum_k |p_k - q_k|, shorter vector padded with zeros.
double tv_distance(const std::vector<double> &p, const std::vector<double> &q);

} // namespace dpp

#endif // DPP_COUNTS_HPP
