#ifndef DPP_TESTS_ORACLES_HPP
#define DPP_TESTS_ORACLES_HPP

// Independent reference computations. None of these call into the library's
// measure, counts, or fock code.

#include "dpp/types.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace dpp::testing {

/// P(X = S) = |det(K - I_{S^c})|, with I_{S^c} the indicator diagonal of the
/// complement of S.
inline double elementary_by_complement_det(const Matrix &k, std::uint64_t mask) {
  const auto n = k.rows();
  Matrix m = k;
  for (Eigen::Index i = 0; i < n; ++i)
    if (((mask >> i) & 1U) == 0)
      m(i, i) -= 1.0;
  return std::abs(m.fullPivLu().determinant());
}

inline std::vector<double> pmf_by_complement_det(const Matrix &k) {
  std::vector<double> out(std::size_t{1} << k.rows());
  for (std::size_t mask = 0; mask < out.size(); ++mask)
    out[mask] = elementary_by_complement_det(k, mask);
  return out;
}

/// Principal minor by full-pivot LU.
inline double minor_oracle(const Matrix &k, std::uint64_t mask) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    if ((mask >> i) & 1U)
      idx.push_back(i);
  const auto m = static_cast<Eigen::Index>(idx.size());
  if (m == 0)
    return 1.0;
  Matrix sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      sub(a, b) = k(idx[a], idx[b]);
  return sub.fullPivLu().determinant().real();
}

/// Law of a sum of independent Bernoullis by enumerating all 2^n outcomes.
inline std::vector<double> poisson_binomial_brute(const std::vector<double> &p) {
  const std::size_t n = p.size();
  std::vector<double> out(n + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double w = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      w *= ((mask >> j) & 1U) ? p[j] : 1.0 - p[j];
    out[std::popcount(mask)] += w;
  }
  return out;
}

/// Elementary symmetric polynomial e_m by enumeration.
inline double elementary_symmetric(const std::vector<double> &x, int m) {
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
    if (std::popcount(mask) != m)
      continue;
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if ((mask >> j) & 1U)
        prod *= x[j];
    sum += prod;
  }
  return sum;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

} // namespace dpp::testing

#endif // DPP_TESTS_ORACLES_HPP
