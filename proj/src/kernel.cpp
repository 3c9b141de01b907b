#include "dpp/kernel.hpp"

#include "dpp/error.hpp"
#include "dpp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dpp {

namespace {

Matrix hermitian_part(const Matrix &m) { return (m + m.adjoint()) * 0.5; }

struct EigenPairs {
  RealVector values; // descending
  Matrix vectors;
};

EigenPairs descending_eigenpairs(const Matrix &h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::DecompositionFailure, "Hermitian eigensolver did not converge");
  const auto n = h.rows();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const RealVector &ascending = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return ascending[a] > ascending[b]; });
  EigenPairs out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values[j] = ascending[order[j]];
    out.vectors.col(j) = solver.eigenvectors().col(order[j]);
  }
  return out;
}

Matrix from_spectrum(const Matrix &vectors, const RealVector &values) {
  return hermitian_part(vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint());
}

void require_square_finite(const Matrix &m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw Error(ErrorCode::NotSquare, "kernel must be a non-empty square matrix, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  if (!m.allFinite())
    throw Error(ErrorCode::NonFinite, "matrix has non-finite entries");
}

void require_hermitian(const Matrix &m, double rel_tol) {
  double scale = std::max(1.0, linalg::max_abs(m));
  double asym = linalg::max_abs(m - m.adjoint());
  if (asym > rel_tol * scale)
    throw Error(ErrorCode::NotHermitian,
                "max |K_ij - conj(K_ji)| = " + std::to_string(asym));
}

} // namespace

Matrix SpectralDecomposition::reconstruct() const {
  return from_spectrum(eigenvectors, eigenvalues);
}

HermitianKernel validate_kernel(const Matrix &matrix, const Tolerances &tol) {
  require_square_finite(matrix);
  require_hermitian(matrix, tol.hermitian);

  auto data = std::make_shared<HermitianKernel::Data>();
  data->matrix = hermitian_part(matrix);
  EigenPairs eig = descending_eigenpairs(data->matrix);
  const double lo = eig.values.minCoeff();
  const double hi = eig.values.maxCoeff();
  if (lo < -tol.eig || hi > 1.0 + tol.eig)
    throw Error(ErrorCode::SpectrumOutOfRange,
                "eigenvalues span [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  RealVector clipped = eig.values.cwiseMax(0.0).cwiseMin(1.0);
  data->clipping = (clipped - eig.values).cwiseAbs().maxCoeff();
  if (data->clipping > 0.0)
    data->matrix = from_spectrum(eig.vectors, clipped);
  data->spectrum = std::move(clipped);
  return HermitianKernel(std::move(data), nullptr);
}

SpectralDecomposition spectral_decompose(const HermitianKernel &k, const Tolerances &tol) {
  EigenPairs eig = descending_eigenpairs(k.matrix());
  SpectralDecomposition spec{eig.values.cwiseMax(0.0).cwiseMin(1.0), std::move(eig.vectors)};
  if (linalg::orthonormality_error(spec.eigenvectors) > tol.ortho)
    throw Error(ErrorCode::DecompositionFailure, "eigenvectors lost orthonormality");
  if (linalg::max_abs(spec.reconstruct() - k.matrix()) > tol.recon)
    throw Error(ErrorCode::DecompositionFailure, "eigendecomposition does not reconstruct K");
  return spec;
}

HermitianKernel complement_kernel(const HermitianKernel &k) {
  if (k.complement_)
    return HermitianKernel(k.complement_, k.data_);
  auto data = std::make_shared<HermitianKernel::Data>();
  const int n = k.n();
  data->matrix = Matrix::Identity(n, n) - k.matrix();
  data->spectrum = (1.0 - k.spectrum().array()).reverse();
  data->clipping = k.clipping();
  return HermitianKernel(std::move(data), k.data_);
}

HermitianKernel restrict_kernel(const HermitianKernel &k, const Subset &e) {
  if (e.empty())
    throw Error(ErrorCode::EmptySubset, "restriction to the empty set");
  e.check_range(k.n());
  return validate_kernel(linalg::principal(k.matrix(), e));
}

HermitianKernel rotate_kernel(const HermitianKernel &k, const Matrix &w, const Tolerances &tol) {
  if (w.rows() != k.n() || w.cols() != k.n())
    throw Error(ErrorCode::DimensionMismatch, "basis size does not match kernel");
  linalg::require_unitary(w, tol.ortho);
  return validate_kernel(w.adjoint() * k.matrix() * w, tol);
}

Matrix l_ensemble_of(const HermitianKernel &k, const Tolerances &tol) {
  SpectralDecomposition spec = spectral_decompose(k, tol);
  if (spec.eigenvalues[0] > 1.0 - tol.strict_contraction)
    throw Error(ErrorCode::NotStrictContraction,
                "largest eigenvalue " + std::to_string(spec.eigenvalues[0]) +
                    " too close to 1");
  RealVector ratio = spec.eigenvalues.array() / (1.0 - spec.eigenvalues.array());
  return from_spectrum(spec.eigenvectors, ratio);
}

HermitianKernel kernel_of_l_ensemble(const Matrix &l, const Tolerances &tol) {
  require_square_finite(l);
  require_hermitian(l, tol.hermitian);
  Matrix h = hermitian_part(l);
  EigenPairs eig = descending_eigenpairs(h);
  double scale = std::max(1.0, linalg::max_abs(h));
  if (eig.values.minCoeff() < -tol.eig * scale)
    throw Error(ErrorCode::NotPSD,
                "smallest eigenvalue " + std::to_string(eig.values.minCoeff()));
  RealVector mu = eig.values.cwiseMax(0.0);
  RealVector ratio = mu.array() / (1.0 + mu.array());
  return validate_kernel(from_spectrum(eig.vectors, ratio), tol);
}

HermitianKernel diagonal_kernel(const std::vector<double> &diag) {
  Matrix m = Matrix::Zero(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return validate_kernel(m);
}

} // namespace dpp
