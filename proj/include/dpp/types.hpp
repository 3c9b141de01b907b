#ifndef DPP_TYPES_HPP
#define DPP_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace dpp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared by the kernel algebra.
///
/// `hermitian` is relative: the asymmetry bound actually applied is
/// `hermitian * max(1, max_ij |K_ij|)`.
struct Tolerances {
  double hermitian = 1e-9;
  double eig = 1e-8;
  double ortho = 1e-9;
  double recon = 1e-9;
  double strict_contraction = 1e-8;
};

/// Hard caps on exhaustive computations. Exceeding one raises
/// ErrorCode::DimensionTooLarge instead of approximating.
struct Limits {
  static constexpr int enum_cap = 20;        // 2^n subset enumeration
  static constexpr int fock_cap = 12;        // Fock weight / overlap sums
  static constexpr int fock_cap_small = 6;   // tensor-space correlation operators
  static constexpr long tensor_cap = 4096;   // n^m for tensor operators
};

/// Inclusion-exclusion cancellation slack: negatives above this are clamped.
inline constexpr double kCancellationSlack = 1e-12;

} // namespace dpp

#endif // DPP_TYPES_HPP
