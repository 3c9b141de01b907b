#include "dpp/linalg.hpp"

#include "dpp/error.hpp"

#include <cmath>

namespace dpp::linalg {

Complex det(const Matrix &m) {
  switch (m.rows()) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return m(0, 0);
  case 2:
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  case 3:
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  default:
    return m.partialPivLu().determinant();
  }
}

Matrix principal(const Matrix &m, const Subset &s) { return submatrix(m, s, s); }

Matrix submatrix(const Matrix &m, const Subset &rows, const Subset &cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      out(a, b) = m(rows[a], cols[b]);
  return out;
}

double max_abs(const Matrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double orthonormality_error(const Matrix &w) {
  return max_abs(w.adjoint() * w - Matrix::Identity(w.cols(), w.cols()));
}

void require_unitary(const Matrix &w, double tol) {
  if (w.rows() != w.cols())
    throw Error(ErrorCode::NotUnitary, "basis matrix is not square");
  if (!w.allFinite())
    throw Error(ErrorCode::NonFinite, "basis matrix has non-finite entries");
  double err = orthonormality_error(w);
  if (err > tol)
    throw Error(ErrorCode::NotUnitary, "|W^H W - I|_max = " + std::to_string(err));
}

RealVector hermitian_eigenvalues(const Matrix &m) {
  if (m.rows() == 0)
    return RealVector(0);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::DecompositionFailure, "Hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

} // namespace dpp::linalg
