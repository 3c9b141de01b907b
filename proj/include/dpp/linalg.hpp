#ifndef DPP_LINALG_HPP
#define DPP_LINALG_HPP

#include "dpp/subset.hpp"
#include "dpp/types.hpp"

namespace dpp::linalg {

/// Determinant; closed form up to 3x3, partial-pivot LU above.
/// The 0x0 determinant is 1.
Complex det(const Matrix &m);

/// Principal submatrix on the rows/columns listed in `s`.
Matrix principal(const Matrix &m, const Subset &s);

/// Submatrix with rows `rows` and columns `cols` (both in the given order).
Matrix submatrix(const Matrix &m, const Subset &rows, const Subset &cols);

double max_abs(const Matrix &m);

/// max_ij |W^H W - I|_ij.
double orthonormality_error(const Matrix &w);

/// Throws NotUnitary when W is not square or `orthonormality_error(W) > tol`.
void require_unitary(const Matrix &w, double tol);

/// Eigenvalues of a Hermitian matrix (only the lower triangle is read),
/// ascending. Throws DecompositionFailure on solver non-convergence.
RealVector hermitian_eigenvalues(const Matrix &m);

} // namespace dpp::linalg

#endif // DPP_LINALG_HPP
