#include "dpp/error.hpp"
#include "dpp/fock.hpp"
#include "dpp/kernel.hpp"
#include "dpp/linalg.hpp"
#include "dpp/measure.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <bit>

using namespace dpp;
using namespace dpp::fock;
using namespace dpp::testing;

namespace {

Vector basis_vector(int n, int i) {
  Vector v = Vector::Zero(n);
  v[i] = 1.0;
  return v;
}

Vector random_vector(int n, std::mt19937_64 &gen) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = Complex(normal(gen), normal(gen));
  return v;
}

} // namespace

TEST_CASE("Slater vectors") {
  FockVector e01 = slater_vector({basis_vector(3, 0), basis_vector(3, 1)});
  CHECK(e01.amplitude({0, 1}) == Complex(1.0));
  CHECK(e01.norm_squared() == doctest::Approx(1.0));
  CHECK(std::abs(e01.amplitude({0, 2})) == 0.0);
  CHECK(std::abs(e01.amplitudes()[0]) == 0.0);

  std::mt19937_64 gen(2);
  Vector v = random_vector(4, gen);
  CHECK(slater_vector({v, v}).amplitudes().norm() < 1e-14);

  Vector a = random_vector(4, gen), b = random_vector(4, gen), c = random_vector(4, gen);
  FockVector abc = slater_vector({a, b, c});
  FockVector bac = slater_vector({b, a, c});
  CHECK((abc.amplitudes() + bac.amplitudes()).norm() < 1e-12);

  CHECK_THROWS_AS(slater_vector({a, Vector::Zero(3)}), Error);
  CHECK_THROWS_AS(slater_vector({basis_vector(1, 0), basis_vector(1, 0)}), Error);
}

TEST_CASE("Slater norm is the Gram determinant") {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const int m = 1 + trial % n;
    std::vector<Vector> vs;
    Matrix cols(n, m);
    for (int j = 0; j < m; ++j) {
      vs.push_back(random_vector(n, gen));
      cols.col(j) = vs.back();
    }
    const double gram = (cols.adjoint() * cols).fullPivLu().determinant().real();
    CHECK(slater_vector(vs).norm_squared() == doctest::Approx(gram).epsilon(1e-10));
  }
}

TEST_CASE("Fock overlaps") {
  std::mt19937_64 gen(13);
  Matrix a = random_unitary(4, gen);
  CHECK(std::abs(fock_overlap(a, {0, 2}, a, {0, 2}) - 1.0) < 1e-12);
  CHECK(std::abs(fock_overlap(a, {0, 2}, a, {1, 2})) < 1e-12);
  CHECK(fock_overlap(a, {0}, a, {0, 1}) == Complex(0.0));
  CHECK(fock_overlap(a, {}, a, {}) == Complex(1.0));
  Matrix bad = a;
  bad(0, 0) += 0.1;
  CHECK_THROWS_AS(fock_overlap(bad, {0}, a, {0}), Error);

  SUBCASE("rotated bases induce a unitary on each exterior power") {
    for (int n = 1; n <= 6; ++n) {
      Matrix w = random_unitary(n, gen);
      Matrix v = random_unitary(n, gen);
      const std::uint64_t dim = std::uint64_t{1} << n;
      for (std::uint64_t s = 0; s < dim; ++s) {
        double total = 0.0;
        for (std::uint64_t t = 0; t < dim; ++t)
          total += std::norm(fock_overlap(v, Subset::from_mask(t), w, Subset::from_mask(s)));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }

  SUBCASE("overlap agrees with the inner product of Slater vectors") {
    Matrix b = random_unitary(4, gen);
    Subset s{1, 3}, t{0, 2};
    FockVector fa = slater_vector({a.col(1), a.col(3)});
    FockVector fb = slater_vector({b.col(0), b.col(2)});
    CHECK(std::abs(fa.inner(fb) - fock_overlap(a, s, b, t)) < 1e-12);
  }
}

TEST_CASE("density weights") {
  DensityWeights d = density_weights(spectral_decompose(diagonal_kernel({0.5, 0.25})));
  CHECK(d.weight({0}) == doctest::Approx(0.375));
  CHECK(d.weight({0, 1}) == doctest::Approx(0.125));

  DensityWeights point = density_weights(spectral_decompose(diagonal_kernel({1.0, 0.0})));
  CHECK(point.weight({0}) == 1.0);
  CHECK(point.weight({}) == 0.0);

  DensityWeights vac = density_weights(spectral_decompose(diagonal_kernel({0, 0, 0})));
  CHECK(vac.weight({}) == 1.0);

  std::mt19937_64 gen(9);
  DensityWeights r = density_weights(spectral_decompose(validate_kernel(random_contraction(10, gen))));
  double sum = 0.0;
  for (double w : r.weights) {
    CHECK(w >= 0.0);
    sum += w;
  }
  CHECK(std::abs(sum - 1.0) < 1e-10);

  CHECK_THROWS_AS(density_weights(spectral_decompose(diagonal_kernel(std::vector<double>(13, 0.5)))),
                  Error);
}

TEST_CASE("diagonal probabilities of D_K") {
  std::mt19937_64 gen(19);
  HermitianKernel k = validate_kernel(random_contraction(4, gen));
  SpectralDecomposition spec = spectral_decompose(k);
  DensityWeights d = density_weights(spec);

  for (std::uint64_t s = 0; s < 16; ++s)
    CHECK(diagonal_probability(d, spec.eigenvectors, Subset::from_mask(s)) ==
          doctest::Approx(d.weights[s]).epsilon(1e-12));

  DensityWeights dd = density_weights(spectral_decompose(diagonal_kernel({0.5, 0.25})));
  CHECK(diagonal_probability(dd, Matrix::Identity(2, 2), {0}) == doctest::Approx(0.375));

  Matrix w = random_unitary(4, gen);
  ExactPmf pmf = diagonal_pmf(d, w);
  CHECK(std::abs(pmf.total() - 1.0) < 1e-10);
  for (double p : pmf.by_mask())
    CHECK(p >= 0.0);
  CHECK(pmf({1, 2}) == doctest::Approx(diagonal_probability(d, w, {1, 2})));
}

TEST_CASE("diagonal measure is determinantal with the rotated kernel") {
  std::mt19937_64 gen(29);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      HermitianKernel k = validate_kernel(random_contraction(n, gen));
      DensityWeights d = density_weights(spectral_decompose(k));
      Matrix w = random_unitary(n, gen);
      const Matrix rotated = rotate_kernel(k, w).matrix();
      std::vector<double> contains = superset_sums(diagonal_pmf(d, w).by_mask(), n);
      for (std::uint64_t s0 = 0; s0 < contains.size(); ++s0)
        CHECK(std::abs(contains[s0] - minor_oracle(rotated, s0)) < 1e-9);
    }
  }
}

TEST_CASE("antisymmetrized tensor powers") {
  std::mt19937_64 gen(37);
  Matrix k = validate_kernel(random_contraction(3, gen)).matrix();
  CHECK(linalg::max_abs(antisymmetrized_power(k, 1).matrix - k) == 0.0);

  // Unnormalized 2-antisymmetrizer I - SWAP on C^2 ⊗ C^2.
  Matrix expected = Matrix::Identity(4, 4);
  const int swap[4] = {0, 2, 1, 3};
  for (int i = 0; i < 4; ++i)
    expected(swap[i], i) -= 1.0;
  CHECK(linalg::max_abs(antisymmetrized_power(Matrix::Identity(2, 2), 2).matrix - expected) ==
        0.0);

  TensorOperator d2 = antisymmetrized_power(diagonal_kernel({0.5, 0.25}).matrix(), 2);
  CHECK(d2.matrix.trace().real() == doctest::Approx(0.25));

  for (int m = 1; m <= 3; ++m) {
    HermitianKernel r = validate_kernel(random_contraction(4, gen));
    std::vector<double> lambda(r.spectrum().begin(), r.spectrum().end());
    double factorial = m == 3 ? 6.0 : m;
    CHECK(antisymmetrized_power(r.matrix(), m).matrix.trace().real() ==
          doctest::Approx(factorial * elementary_symmetric(lambda, m)).epsilon(1e-10));
  }

  CHECK(linalg::max_abs(antisymmetrized_power(Matrix::Identity(2, 2), 3).matrix) == 0.0);
  CHECK_THROWS_AS(antisymmetrized_power(Matrix::Identity(9, 9), 4), Error);
  CHECK_THROWS_AS(antisymmetrized_power(k, 0), Error);
}

TEST_CASE("correlation operators from second quantization") {
  DensityWeights d = density_weights(spectral_decompose(diagonal_kernel({0.5, 0.25})));
  TensorOperator k1 = correlation_operator(d, 1);
  CHECK(linalg::max_abs(k1.matrix - diagonal_kernel({0.5, 0.25}).matrix()) < 1e-14);

  TensorOperator k2 = correlation_operator(d, 2);
  // e_0 ⊗ e_1 has flat index 0 * 2 + 1.
  CHECK(k2.matrix(1, 1).real() == doctest::Approx(0.125));
  CHECK(std::abs(k2.matrix(1, 2) + 0.125) < 1e-14);

  SUBCASE("top particle number matches the antisymmetrized power") {
    std::mt19937_64 gen(43);
    for (int n = 2; n <= 4; ++n) {
      SpectralDecomposition spec = spectral_decompose(validate_kernel(random_contraction(n, gen)));
      TensorOperator top = correlation_operator(density_weights(spec), n);
      TensorOperator rhs = antisymmetrized_power(spec.reconstruct(), n);
      CHECK(linalg::max_abs(top.matrix - rhs.matrix) < 1e-10);
      // Its independent entry is n! prod(lambda) for the ordered basis tuple.
      double prod = 1.0, factorial = 1.0;
      for (int j = 0; j < n; ++j) {
        prod *= spec.eigenvalues[j];
        factorial *= j + 1;
      }
      CHECK(top.matrix.trace().real() == doctest::Approx(factorial * prod).epsilon(1e-10));
    }
  }

  SUBCASE("projector expectations give inclusion probabilities") {
    std::mt19937_64 gen(47);
    const int n = 4;
    HermitianKernel k = validate_kernel(random_contraction(n, gen));
    TensorOperator k3 = correlation_operator(density_weights(spectral_decompose(k)), 3);
    // Tr((P_x1 ⊗ P_x2 ⊗ P_x3) K_3) is the diagonal entry at (x1, x2, x3).
    const int x[3] = {0, 2, 3};
    const long flat = (x[0] * n + x[1]) * n + x[2];
    CHECK(k3.matrix(flat, flat).real() ==
          doctest::Approx(inclusion_probability(k, {0, 2, 3})).epsilon(1e-10));
  }

  CHECK_THROWS_AS(correlation_operator(density_weights(spectral_decompose(
                                           diagonal_kernel(std::vector<double>(7, 0.5)))),
                                       1),
                  Error);
  CHECK_THROWS_AS(correlation_operator(d, 3), Error);
}

TEST_CASE("key identity") {
  CHECK(key_identity_gap(spectral_decompose(diagonal_kernel({0.5, 0.25})), 1) < 1e-12);

  std::mt19937_64 gen(53);
  CHECK(key_identity_gap(spectral_decompose(validate_kernel(random_contraction(3, gen))), 2) <=
        1e-9);
  CHECK(key_identity_gap(spectral_decompose(validate_kernel(random_projection(3, 1, gen))), 2) <=
        1e-9);

  // Degenerate spectra: no canonical eigenbasis, result must not care.
  CHECK(key_identity_gap(spectral_decompose(validate_kernel(random_projection(4, 2, gen))), 2) <=
        1e-9);
  CHECK(key_identity_gap(spectral_decompose(diagonal_kernel({0.5, 0.5, 0.5})), 3) <= 1e-9);

  // n = 6 exercises the largest tensor spaces the oracle allows.
  CHECK(key_identity_gap(spectral_decompose(validate_kernel(random_contraction(6, gen))), 2) <=
        1e-9);
}
