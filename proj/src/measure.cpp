#include "dpp/measure.hpp"

#include "dpp/error.hpp"
#include "dpp/linalg.hpp"
#include "dpp/parallel.hpp"

#include <bit>
#include <cmath>

namespace dpp {

namespace {

void require_enumerable(int n) {
  if (n > Limits::enum_cap)
    throw Error(ErrorCode::DimensionTooLarge,
                "exact enumeration needs n <= " + std::to_string(Limits::enum_cap) +
                    ", got " + std::to_string(n));
}

double clamp_cancellation(double p) {
  if (p >= 0.0)
    return p;
  if (p >= -kCancellationSlack)
    return 0.0;
  throw Error(ErrorCode::NumericalInconsistency,
              "inclusion-exclusion produced " + std::to_string(p));
}

double principal_minor(const Matrix &k, std::uint64_t mask) {
  return linalg::det(linalg::principal(k, Subset::from_mask(mask))).real();
}

std::vector<double> all_inclusion_probabilities(const Matrix &k) {
  const int n = static_cast<int>(k.rows());
  std::vector<double> out(std::size_t{1} << n);
  parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t mask = begin; mask < end; ++mask)
      out[mask] = principal_minor(k, mask);
  });
  return out;
}

} // namespace

ExactPmf::ExactPmf(int n, std::vector<double> probabilities)
    : n_(n), probabilities_(std::move(probabilities)) {
  if (n < 0 || n > 63 || probabilities_.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimensionMismatch, "pmf table does not have 2^n entries");
}

double ExactPmf::operator()(const Subset &s) const {
  s.check_range(n_);
  return probabilities_[s.mask()];
}

double ExactPmf::total() const {
  double sum = 0.0;
  for (double p : probabilities_)
    sum += p;
  return sum;
}

std::vector<double> ExactPmf::cardinality_marginal() const {
  std::vector<double> out(n_ + 1, 0.0);
  for (std::size_t mask = 0; mask < probabilities_.size(); ++mask)
    out[std::popcount(mask)] += probabilities_[mask];
  return out;
}

std::vector<double> superset_sums(std::vector<double> values, int n) {
  if (values.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimensionMismatch, "table does not have 2^n entries");
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < values.size(); ++mask)
      if ((mask & b) == 0)
        values[mask] += values[mask | b];
  }
  return values;
}

double inclusion_probability(const HermitianKernel &k, const Subset &s) {
  s.check_range(k.n());
  return linalg::det(linalg::principal(k.matrix(), s)).real();
}

double elementary_probability(const HermitianKernel &k, const Subset &s) {
  const int n = k.n();
  require_enumerable(n);
  s.check_range(n);
  const std::uint64_t base = s.mask();
  const std::uint64_t rest = ((std::uint64_t{1} << n) - 1) & ~base;
  // Walk the subsets of `rest` in increasing numeric order.
  double sum = 0.0;
  std::uint64_t extra = 0;
  do {
    double term = principal_minor(k.matrix(), base | extra);
    sum += (std::popcount(extra) % 2 == 0) ? term : -term;
    extra = (extra - rest) & rest;
  } while (extra != 0);
  return clamp_cancellation(sum);
}

ExactPmf full_pmf(const HermitianKernel &k) {
  const int n = k.n();
  require_enumerable(n);
  std::vector<double> p = all_inclusion_probabilities(k.matrix());
  // Möbius inversion of the superset sums.
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < p.size(); ++mask)
      if ((mask & b) == 0)
        p[mask] -= p[mask | b];
  }
  for (double &v : p)
    v = clamp_cancellation(v);
  return ExactPmf(n, std::move(p));
}

ComplementCheck complement_pmf_check(const HermitianKernel &k) {
  const int n = k.n();
  require_enumerable(n);
  ExactPmf pmf = full_pmf(k);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<double> complemented(pmf.by_mask().size());
  for (std::size_t mask = 0; mask <= full; ++mask)
    complemented[mask] = pmf.at_mask(full & ~mask);
  std::vector<double> contains = superset_sums(std::move(complemented), n);
  std::vector<double> direct = all_inclusion_probabilities(complement_kernel(k).matrix());

  ComplementCheck out;
  for (std::size_t mask = 0; mask <= full; ++mask)
    out.max_discrepancy = std::max(out.max_discrepancy, std::abs(contains[mask] - direct[mask]));
  out.passed = out.max_discrepancy <= 1e-10;
  return out;
}

double void_probability(const HermitianKernel &k, const Subset &e) {
  e.check_range(k.n());
  if (e.empty())
    return 1.0;
  RealVector lambda = linalg::hermitian_eigenvalues(linalg::principal(k.matrix(), e));
  double product = 1.0;
  for (double l : lambda)
    product *= 1.0 - std::clamp(l, 0.0, 1.0);
  return product;
}

double correlation_sum(const HermitianKernel &k, const std::vector<Subset> &blocks) {
  if (blocks.empty())
    throw Error(ErrorCode::InvalidArgument, "correlation_sum needs at least one block");
  std::vector<bool> seen(k.n(), false);
  for (const Subset &b : blocks) {
    b.check_range(k.n());
    for (int i : b) {
      if (seen[i])
        throw Error(ErrorCode::BlocksNotDisjoint, "index " + std::to_string(i) +
                                                      " appears in two blocks");
      seen[i] = true;
    }
    if (b.empty())
      return 0.0;
  }

  const std::size_t m = blocks.size();
  std::vector<std::size_t> odometer(m, 0);
  Matrix minor(m, m);
  double sum = 0.0;
  while (true) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        minor(a, b) = k(blocks[a][odometer[a]], blocks[b][odometer[b]]);
    sum += linalg::det(minor).real();

    std::size_t slot = 0;
    while (slot < m && ++odometer[slot] == blocks[slot].size())
      odometer[slot++] = 0;
    if (slot == m)
      break;
  }
  return sum;
}

double janossy_weight(const HermitianKernel &k, const Subset &s, const Tolerances &tol) {
  s.check_range(k.n());
  Matrix l = l_ensemble_of(k, tol);
  double void_all = 1.0;
  for (double lambda : k.spectrum())
    void_all *= 1.0 - lambda;
  return void_all * linalg::det(linalg::principal(l, s)).real();
}

} // namespace dpp
