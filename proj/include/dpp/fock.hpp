#ifndef DPP_FOCK_HPP
#define DPP_FOCK_HPP

#include "dpp/kernel.hpp"
#include "dpp/measure.hpp"
#include "dpp/subset.hpp"
#include "dpp/types.hpp"

#include <cstdint>
#include <vector>

/// Explicit fermion Fock space over C^n, used as an exhaustive oracle for the
/// determinantal machinery. Everything here is exponential in n and guarded
/// by the caps in `Limits`.
namespace dpp::fock {

/// Index tables for the 2^n Fock basis vectors in (cardinality, lex) order.
class FockBasis {
public:
  explicit FockBasis(int n);

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return masks_.size(); }
  std::uint64_t mask_at(std::size_t position) const { return masks_[position]; }
  std::size_t position_of(std::uint64_t mask) const { return positions_[mask]; }

private:
  int n_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> positions_;
};

/// Vector of the exterior algebra, coordinates taken in the Fock basis built
/// from the standard basis of C^n. Component 0 is the vacuum.
class FockVector {
public:
  FockVector(int n, Vector amplitudes);

  int n() const noexcept { return n_; }
  const Vector &amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(const Subset &s) const;
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  Complex inner(const FockVector &other) const { return amplitudes_.dot(other.amplitudes_); }

private:
  int n_;
  Vector amplitudes_;
};

/// v_1 ∧ ... ∧ v_m. Normalized with 1/sqrt(m!) on the tensor side, so the
/// coordinate at S = {s_1 < ... < s_m} is det(v_b[s_a]) and the squared norm
/// is the Gram determinant of the inputs.
FockVector slater_vector(const std::vector<Vector> &vectors);

/// <f_A(S), f_B(T)>: zero unless |S| = |T|; otherwise det(<a_s, b_t>).
Complex fock_overlap(const Matrix &basis_a, const Subset &s, const Matrix &basis_b,
                     const Subset &t, double ortho_tol = 1e-9);

/// The density operator D_K held diagonally in the eigen-Fock basis.
struct DensityWeights {
  SpectralDecomposition eigenbasis;
  std::vector<double> weights; // by mask over eigenvector indices

  int n() const noexcept { return eigenbasis.n(); }
  double weight(const Subset &s) const { return weights[s.mask()]; }
};

/// weight(S) = prod_{k ∈ S} lambda_k prod_{k ∉ S} (1 - lambda_k).
DensityWeights density_weights(const SpectralDecomposition &spec);

/// <f_W(S), D_K f_W(S)> = sum_T weight(T) |<f_V(T), f_W(S)>|^2.
double diagonal_probability(const DensityWeights &d, const Matrix &w, const Subset &s,
                            double ortho_tol = 1e-9);

/// diagonal_probability for every S at once, as a pmf over masks.
ExactPmf diagonal_pmf(const DensityWeights &d, const Matrix &w, double ortho_tol = 1e-9);

/// Operator on (C^n)^{⊗m}. Multi-index (a_1, ..., a_m) maps to the flat
/// index sum_r a_r n^{m-r}, i.e. the first tensor slot is most significant.
struct TensorOperator {
  int n = 0;
  int m = 0;
  Matrix matrix;
};

/// (K ⊗ ... ⊗ K) sum_{π ∈ S_m} sgn(π) U_π, with
/// U_π(w_1 ⊗ ... ⊗ w_m) = w_{π^{-1}(1)} ⊗ ... ⊗ w_{π^{-1}(m)}.
TensorOperator antisymmetrized_power(const Matrix &k, int m);

/// K_m[D]: the operator with Tr(Γ_m[A] D) = Tr(A K_m[D]) for all A.
///
/// Built from first principles: every eigen-Fock vector f_V(S) with |S| >= m
/// is expanded as a normalized antisymmetric tensor in (C^n)^{⊗|S|}, and for
/// each injection j of the m particle slots into the |S| occupied slots the
/// reduced operator of A^{(j)} is accumulated. No use is made of the
/// closed form on the right-hand side of the key identity.
TensorOperator correlation_operator(const DensityWeights &d, int m);

/// max-norm of K_m[D_K] - antisymmetrized_power(K, m).
double key_identity_gap(const SpectralDecomposition &spec, int m);

} // namespace dpp::fock

#endif // DPP_FOCK_HPP
