#include "dpp/fock.hpp"

#include "dpp/error.hpp"
#include "dpp/linalg.hpp"
#include "dpp/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace dpp::fock {

namespace {

void require_fock_size(int n, int cap) {
  if (n > cap)
    throw Error(ErrorCode::DimensionTooLarge,
                "Fock oracle limited to n <= " + std::to_string(cap) + ", got " +
                    std::to_string(n));
}

long checked_power(int base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    if (out > Limits::tensor_cap)
      throw Error(ErrorCode::DimensionTooLarge,
                  "tensor space dimension n^m exceeds " + std::to_string(Limits::tensor_cap));
  }
  return out;
}

long power(int base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i)
    out *= base;
  return out;
}

/// Digits of a flat multi-index, first slot most significant.
void digits_of(long flat, int n, int slots, std::vector<int> &out) {
  out.resize(slots);
  for (int r = slots - 1; r >= 0; --r) {
    out[r] = static_cast<int>(flat % n);
    flat /= n;
  }
}

struct SignedPermutation {
  std::vector<int> image; // image[q] = π(q)
  int sign;
};

std::vector<SignedPermutation> signed_permutations(int m) {
  std::vector<SignedPermutation> out;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        inversions += p[a] > p[b];
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Ordered tuples (j_1, ..., j_m) of distinct slots in [0, k): the
/// injections of m particle slots into k.
void injections(int m, int k, std::vector<int> &current, std::vector<bool> &used,
                std::vector<std::vector<int>> &out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int slot = 0; slot < k; ++slot) {
    if (used[slot])
      continue;
    used[slot] = true;
    current.push_back(slot);
    injections(m, k, current, used, out);
    current.pop_back();
    used[slot] = false;
  }
}

std::vector<std::vector<int>> injections(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(k, false);
  injections(m, k, current, used, out);
  return out;
}

/// Normalized Slater tensor (1/sqrt(k!)) sum_π sgn(π) U_π (v_1 ⊗ ... ⊗ v_k)
/// as a dense vector over (C^n)^{⊗k}.
Vector slater_tensor(const std::vector<Vector> &factors, int n) {
  const int k = static_cast<int>(factors.size());
  const long dim = power(n, k);
  Vector product(dim);
  std::vector<int> x;
  for (long flat = 0; flat < dim; ++flat) {
    digits_of(flat, n, k, x);
    Complex value{1.0, 0.0};
    for (int r = 0; r < k; ++r)
      value *= factors[r][x[r]];
    product[flat] = value;
  }

  // (U_π P)[x_1, ..., x_k] = P[x_π(1), ..., x_π(k)].
  Vector out = Vector::Zero(dim);
  std::vector<long> stride(k);
  for (int r = 0; r < k; ++r)
    stride[r] = power(n, k - 1 - r);
  for (const auto &perm : signed_permutations(k)) {
    for (long flat = 0; flat < dim; ++flat) {
      digits_of(flat, n, k, x);
      long source = 0;
      for (int q = 0; q < k; ++q)
        source += x[perm.image[q]] * stride[q];
      out[flat] += static_cast<double>(perm.sign) * product[source];
    }
  }
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i)
    factorial *= i;
  return out / std::sqrt(factorial);
}

} // namespace

FockBasis::FockBasis(int n) : n_(n) {
  require_fock_size(n, Limits::fock_cap);
  masks_ = fock_order_masks(n);
  positions_.resize(masks_.size());
  for (std::size_t p = 0; p < masks_.size(); ++p)
    positions_[masks_[p]] = p;
}

FockVector::FockVector(int n, Vector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
  require_fock_size(n, Limits::fock_cap);
  if (amplitudes_.size() != (Eigen::Index{1} << n))
    throw Error(ErrorCode::DimensionMismatch, "Fock vector must have 2^n amplitudes");
  if (!amplitudes_.allFinite())
    throw Error(ErrorCode::NonFinite, "Fock vector has non-finite amplitudes");
}

Complex FockVector::amplitude(const Subset &s) const {
  s.check_range(n_);
  return amplitudes_[FockBasis(n_).position_of(s.mask())];
}

FockVector slater_vector(const std::vector<Vector> &vectors) {
  if (vectors.empty())
    throw Error(ErrorCode::InvalidArgument, "a Slater determinant needs at least one factor");
  const auto n = vectors.front().size();
  for (const Vector &v : vectors)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "Slater factors differ in length");
  const int m = static_cast<int>(vectors.size());
  if (m > n)
    throw Error(ErrorCode::TooManyFactors, std::to_string(m) + " factors in C^" +
                                               std::to_string(n));

  FockBasis basis(static_cast<int>(n));
  Matrix columns(n, m);
  for (int c = 0; c < m; ++c)
    columns.col(c) = vectors[c];

  Vector amplitudes = Vector::Zero(basis.dimension());
  for (std::size_t p = 0; p < basis.dimension(); ++p) {
    const std::uint64_t mask = basis.mask_at(p);
    if (std::popcount(mask) != m)
      continue;
    Subset rows = Subset::from_mask(mask);
    Matrix minor(m, m);
    for (int a = 0; a < m; ++a)
      minor.row(a) = columns.row(rows[a]);
    amplitudes[p] = linalg::det(minor);
  }
  return FockVector(static_cast<int>(n), std::move(amplitudes));
}

Complex fock_overlap(const Matrix &basis_a, const Subset &s, const Matrix &basis_b,
                     const Subset &t, double ortho_tol) {
  linalg::require_unitary(basis_a, ortho_tol);
  linalg::require_unitary(basis_b, ortho_tol);
  if (basis_a.rows() != basis_b.rows())
    throw Error(ErrorCode::DimensionMismatch, "bases act on different spaces");
  const int n = static_cast<int>(basis_a.rows());
  s.check_range(n);
  t.check_range(n);
  if (s.size() != t.size())
    return {0.0, 0.0};
  const auto m = static_cast<Eigen::Index>(s.size());
  Matrix gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      gram(i, j) = basis_a.col(s[i]).dot(basis_b.col(t[j]));
  return linalg::det(gram);
}

DensityWeights density_weights(const SpectralDecomposition &spec) {
  const int n = spec.n();
  require_fock_size(n, Limits::fock_cap);
  DensityWeights out{spec, std::vector<double>(std::size_t{1} << n)};
  for (std::size_t mask = 0; mask < out.weights.size(); ++mask) {
    double w = 1.0;
    for (int k = 0; k < n; ++k) {
      const double lambda = spec.eigenvalues[k];
      w *= ((mask >> k) & 1U) ? lambda : 1.0 - lambda;
    }
    out.weights[mask] = w;
  }
  return out;
}

namespace {

/// sum_T weight(T) |det G[T, S]|^2 with G = V^H W.
double diagonal_from_gram(const DensityWeights &d, const Matrix &gram, std::uint64_t s_mask) {
  const Subset s = Subset::from_mask(s_mask);
  const int size = std::popcount(s_mask);
  double sum = 0.0;
  for (std::size_t t_mask = 0; t_mask < d.weights.size(); ++t_mask) {
    if (std::popcount(t_mask) != size || d.weights[t_mask] == 0.0)
      continue;
    sum += d.weights[t_mask] * std::norm(linalg::det(
                                   linalg::submatrix(gram, Subset::from_mask(t_mask), s)));
  }
  return sum;
}

Matrix checked_gram(const DensityWeights &d, const Matrix &w, double ortho_tol) {
  require_fock_size(d.n(), Limits::fock_cap);
  if (w.rows() != d.n() || w.cols() != d.n())
    throw Error(ErrorCode::DimensionMismatch, "basis size does not match density");
  linalg::require_unitary(w, ortho_tol);
  return d.eigenbasis.eigenvectors.adjoint() * w;
}

} // namespace

double diagonal_probability(const DensityWeights &d, const Matrix &w, const Subset &s,
                            double ortho_tol) {
  Matrix gram = checked_gram(d, w, ortho_tol);
  s.check_range(d.n());
  return diagonal_from_gram(d, gram, s.mask());
}

ExactPmf diagonal_pmf(const DensityWeights &d, const Matrix &w, double ortho_tol) {
  Matrix gram = checked_gram(d, w, ortho_tol);
  std::vector<double> p(d.weights.size());
  parallel_for(p.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t mask = begin; mask < end; ++mask)
      p[mask] = diagonal_from_gram(d, gram, mask);
  });
  return ExactPmf(d.n(), std::move(p));
}

TensorOperator antisymmetrized_power(const Matrix &k, int m) {
  if (k.rows() != k.cols() || k.rows() == 0)
    throw Error(ErrorCode::NotSquare, "antisymmetrized_power needs a square matrix");
  if (m < 1)
    throw Error(ErrorCode::InvalidArgument, "particle number must be >= 1");
  const int n = static_cast<int>(k.rows());
  const long dim = checked_power(n, m);
  TensorOperator out{n, m, Matrix::Zero(dim, dim)};
  // With more slots than one-particle states every column of the
  // antisymmetrizer vanishes.
  if (m > n)
    return out;

  const auto perms = signed_permutations(m);
  std::vector<std::vector<int>> digits(dim);
  for (long flat = 0; flat < dim; ++flat)
    digits_of(flat, n, m, digits[flat]);

  // Column b of sum sgn(π) U_π is sum sgn(π) e_{π·b}, where slot r of π·b
  // holds b_{π^{-1}(r)}; row a of the tensor power at column c is
  // prod_r K(a_r, c_r).
  std::vector<int> c(m);
  for (long b = 0; b < dim; ++b) {
    const auto &bd = digits[b];
    for (const auto &perm : perms) {
      for (int q = 0; q < m; ++q)
        c[perm.image[q]] = bd[q];
      for (long a = 0; a < dim; ++a) {
        const auto &ad = digits[a];
        Complex term{static_cast<double>(perm.sign), 0.0};
        for (int r = 0; r < m; ++r)
          term *= k(ad[r], c[r]);
        out.matrix(a, b) += term;
      }
    }
  }
  return out;
}

TensorOperator correlation_operator(const DensityWeights &d, int m) {
  const int n = d.n();
  require_fock_size(n, Limits::fock_cap_small);
  if (m < 1 || m > n)
    throw Error(ErrorCode::InvalidArgument, "particle number must lie in [1, n]");
  const long dim = checked_power(n, m);
  TensorOperator out{n, m, Matrix::Zero(dim, dim)};
  const Matrix &v = d.eigenbasis.eigenvectors;

  for (std::size_t mask = 0; mask < d.weights.size(); ++mask) {
    const int k = std::popcount(mask);
    const double weight = d.weights[mask];
    if (k < m || weight == 0.0)
      continue;

    std::vector<Vector> factors;
    for (int s : Subset::from_mask(mask))
      factors.push_back(v.col(s));
    const Vector f = slater_tensor(factors, n);
    const long full_dim = f.size();
    const long rest_dim = power(n, k - m);

    std::vector<int> x;
    for (const auto &slots : injections(m, k)) {
      std::vector<bool> particle(k, false);
      for (int s : slots)
        particle[s] = true;
      // A^{(j)} acts as A on slots j_1, ..., j_m (in that order) and as the
      // identity on the remaining slots, taken in ascending order.
      Matrix reduced(dim, rest_dim);
      for (long flat = 0; flat < full_dim; ++flat) {
        digits_of(flat, n, k, x);
        long a = 0;
        for (int r = 0; r < m; ++r)
          a = a * n + x[slots[r]];
        long rest = 0;
        for (int slot = 0; slot < k; ++slot)
          if (!particle[slot])
            rest = rest * n + x[slot];
        reduced(a, rest) = f[flat];
      }
      // <f, A^{(j)} f> = Tr(A M M^H).
      out.matrix.noalias() += weight * (reduced * reduced.adjoint());
    }
  }
  return out;
}

double key_identity_gap(const SpectralDecomposition &spec, int m) {
  const TensorOperator fock_side = correlation_operator(density_weights(spec), m);
  const TensorOperator closed_form = antisymmetrized_power(spec.reconstruct(), m);
  return linalg::max_abs(fock_side.matrix - closed_form.matrix);
}

} // namespace dpp::fock
