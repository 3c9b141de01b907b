#ifndef DPP_MEASURE_HPP
#define DPP_MEASURE_HPP

#include "dpp/kernel.hpp"
#include "dpp/subset.hpp"

#include <cstdint>
#include <vector>

namespace dpp {

/// Exact law of a random subset of {0, ..., n-1}, stored densely by mask.
class ExactPmf {
public:
  ExactPmf(int n, std::vector<double> probabilities);

  int n() const noexcept { return n_; }
  double operator()(const Subset &s) const;
  double at_mask(std::uint64_t mask) const { return probabilities_[mask]; }
  const std::vector<double> &by_mask() const noexcept { return probabilities_; }

  double total() const;
  /// Law of |X|: entry k is P(|X| = k).
  std::vector<double> cardinality_marginal() const;

private:
  int n_;
  std::vector<double> probabilities_;
};

/// P(S ⊆ X) = det K_S. The empty set has probability 1.
double inclusion_probability(const HermitianKernel &k, const Subset &s);

/// P(X = S) by inclusion-exclusion over supersets of S.
double elementary_probability(const HermitianKernel &k, const Subset &s);

/// All 2^n elementary probabilities. Inclusion probabilities of every subset
/// are computed independently (in parallel) and then Möbius-inverted with a
/// fixed butterfly order, so results do not depend on the thread count.
ExactPmf full_pmf(const HermitianKernel &k);

struct ComplementCheck {
  bool passed = false;
  double max_discrepancy = 0.0;
};

/// Compares P(X^c ⊇ S), computed from full_pmf(K), with det((I-K)_S) for
/// every S. Passes when the largest discrepancy is <= 1e-10.
ComplementCheck complement_pmf_check(const HermitianKernel &k);

/// P(X ∩ E = ∅) = prod (1 - eigenvalues of K_E); 1 for E = ∅.
double void_probability(const HermitianKernel &k, const Subset &e);

/// Sum over x_1 ∈ E_1, ..., x_m ∈ E_m of det(K(x_i, x_j)), which equals
/// E[prod_j #(X ∩ E_j)] for pairwise disjoint blocks.
double correlation_sum(const HermitianKernel &k, const std::vector<Subset> &blocks);

/// Det(I - K) det(L_S) with L the L-ensemble of K.
double janossy_weight(const HermitianKernel &k, const Subset &s,
                      const Tolerances &tol = {});

/// Superset-sum (zeta) transform: out[S] = sum_{T ⊇ S} in[T].
std::vector<double> superset_sums(std::vector<double> values, int n);

} // namespace dpp

#endif // DPP_MEASURE_HPP
