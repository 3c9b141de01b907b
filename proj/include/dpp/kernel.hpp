#ifndef DPP_KERNEL_HPP
#define DPP_KERNEL_HPP

#include "dpp/subset.hpp"
#include "dpp/types.hpp"

#include <memory>

namespace dpp {

/// Hermitian n x n matrix with spectrum in [0, 1]: the correlation kernel of
/// a determinantal point process on {0, ..., n-1}.
///
/// Instances are immutable and cheap to copy (shared storage). The only way
/// to obtain one is through `validate_kernel` or an operation of the kernel
/// algebra below, so every instance satisfies the invariants.
class HermitianKernel {
public:
  int n() const noexcept { return static_cast<int>(data_->matrix.rows()); }
  const Matrix &matrix() const noexcept { return data_->matrix; }
  Complex operator()(int i, int j) const { return data_->matrix(i, j); }

  /// Eigenvalues clipped to [0, 1], descending.
  const RealVector &spectrum() const noexcept { return data_->spectrum; }

  /// Largest eigenvalue correction applied during validation (0 if none).
  double clipping() const noexcept { return data_->clipping; }

private:
  struct Data {
    Matrix matrix;
    RealVector spectrum;
    double clipping = 0.0;
  };

  HermitianKernel(std::shared_ptr<const Data> data,
                  std::shared_ptr<const Data> complement)
      : data_(std::move(data)), complement_(std::move(complement)) {}

  std::shared_ptr<const Data> data_;
  // Set when this kernel was produced by complement_kernel; lets the
  // complement of a complement return the original storage bit-for-bit.
  std::shared_ptr<const Data> complement_;

  friend HermitianKernel validate_kernel(const Matrix &, const Tolerances &);
  friend HermitianKernel complement_kernel(const HermitianKernel &);
};

/// Eigenpairs of a kernel, eigenvalues descending (ties keep solver order).
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors; // column j pairs with eigenvalues[j]

  int n() const noexcept { return static_cast<int>(eigenvalues.size()); }
  /// V diag(lambda) V^H.
  Matrix reconstruct() const;
};

/// Checks shape, finiteness, Hermitian symmetry and spectrum; eigenvalues
/// within `tol.eig` outside [0, 1] are clipped and the matrix is rebuilt from
/// the clipped spectrum.
HermitianKernel validate_kernel(const Matrix &matrix, const Tolerances &tol = {});

SpectralDecomposition spectral_decompose(const HermitianKernel &k,
                                         const Tolerances &tol = {});

/// I - K. Applying it twice returns the original kernel exactly.
HermitianKernel complement_kernel(const HermitianKernel &k);

/// Principal submatrix K_E, re-indexed 0..|E|-1 in the order of E.
HermitianKernel restrict_kernel(const HermitianKernel &k, const Subset &e);

/// Kernel with entry (i, j) = <K w_i, w_j> = (W^H K W)_ij, w_i the columns of
/// W. Inner products are conjugate-linear in the first slot throughout.
HermitianKernel rotate_kernel(const HermitianKernel &k, const Matrix &w,
                              const Tolerances &tol = {});

/// L = (I - K)^{-1} K. Requires max eigenvalue <= 1 - tol.strict_contraction.
Matrix l_ensemble_of(const HermitianKernel &k, const Tolerances &tol = {});

/// K = L (I + L)^{-1} for Hermitian positive semidefinite L.
HermitianKernel kernel_of_l_ensemble(const Matrix &l, const Tolerances &tol = {});

/// Diagonal kernel shorthand, mainly for tests and the CLI.
HermitianKernel diagonal_kernel(const std::vector<double> &diag);

} // namespace dpp

#endif // DPP_KERNEL_HPP
