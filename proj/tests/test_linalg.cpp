#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfrad/linalg.hpp"
#include "test_support.hpp"

using namespace halfrad;
using namespace halfrad::testing;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("svd: fixed spectra") {
  const SvdResult si = svd(Matrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(si.singular_values(i) == doctest::Approx(1.0));

  const SvdResult sj = svd(shift_j());
  CHECK(sj.singular_values(0) == doctest::Approx(1.0));
  CHECK(sj.singular_values(1) == doctest::Approx(0.0));

  const SvdResult s2 = svd(structure_only_fixture());
  CHECK(s2.singular_values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s2.singular_values(1) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(s2.singular_values(2) == doctest::Approx(0.0));
}

TEST_CASE("svd: rejects bad input") {
  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(svd(rect), Error);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(svd(bad), Error);
}

TEST_CASE("svd: round-trip and unitarity residuals on random matrices") {
  std::mt19937_64 rng(11);
  for (Eigen::Index n : {2, 5, 17, 50}) {
    const Matrix a = random_matrix(n, rng);
    const SvdResult s = svd(a);
    const Matrix rebuilt = s.U * s.singular_values.asDiagonal() * s.V.adjoint();
    CHECK((a - rebuilt).norm() <= 1e-12 * std::max(1.0, a.norm()));
    CHECK((s.U.adjoint() * s.U - Matrix::Identity(n, n)).norm() <= 1e-12 * n);
    CHECK((s.V.adjoint() * s.V - Matrix::Identity(n, n)).norm() <= 1e-12 * n);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      CHECK(s.singular_values(i) >= s.singular_values(i + 1));
  }
}

TEST_CASE("hermitian_eigmax: fixed cases") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const auto [lmax, q] = hermitian_eigmax(d);
  CHECK(lmax == doctest::Approx(1.0));
  CHECK(std::abs(q(0)) == doctest::Approx(1.0));

  // (J + J^*)/2 has eigenvalues +-1/2.
  const Matrix j = shift_j();
  const auto [half, _] = hermitian_eigmax(0.5 * (j + j.adjoint()));
  CHECK(half == doctest::Approx(0.5));

  const auto [zero, q0] = hermitian_eigmax(Matrix::Zero(3, 3));
  CHECK(zero == 0.0);
  CHECK(q0.norm() == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigmax: rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigmax(shift_j()), Error);
}

TEST_CASE("hermitian_eigmax: residual bound on random Hermitian") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(2 + trial % 7, rng);
    const auto [lambda, q] = hermitian_eigmax(h);
    CHECK((h * q - lambda * q).norm() <= 1e-10 * h.norm());
    CHECK(q.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("spectral_norm: shift, CCC superdiagonal, scaling") {
  CHECK(spectral_norm(shift_j()) == doctest::Approx(1.0));

  // C_n^* C_n is diagonal with entries (0, 2, 1, ..., 1, 2), so the norm of
  // the bidiagonal matrix is sqrt(2) exactly.
  for (int n = 2; n <= 6; ++n) {
    Matrix c = Matrix::Zero(n + 1, n + 1);
    c(0, 1) = kSqrt2;
    for (int i = 1; i < n - 1; ++i) c(i, i + 1) = 1.0;
    c(n - 1, n) = kSqrt2;
    CHECK(spectral_norm(c) == doctest::Approx(kSqrt2).epsilon(1e-13));
  }

  std::mt19937_64 rng(13);
  const Matrix a = random_matrix(5, rng);
  const Complex alpha(1.7, -0.4);
  CHECK(spectral_norm(alpha * a) ==
        doctest::Approx(std::abs(alpha) * spectral_norm(a)).epsilon(1e-12));
}

TEST_CASE("matrix_power: nilpotency and identities") {
  CHECK(matrix_power(shift_j(), 2).norm() == 0.0);
  CHECK(matrix_power(shift_j(), 0).isApprox(Matrix::Identity(2, 2)));

  std::mt19937_64 rng(14);
  const Matrix a = random_matrix(4, rng);
  CHECK(matrix_power(a, 1).isApprox(a));
  CHECK_THROWS_AS(matrix_power(a, -1), Error);

  // C_n^n = 2 e_1 e_{n+1}^T.
  for (int n = 2; n <= 10; ++n) {
    Matrix c = Matrix::Zero(n + 1, n + 1);
    c(0, 1) = kSqrt2;
    for (int i = 1; i < n - 1; ++i) c(i, i + 1) = 1.0;
    c(n - 1, n) = kSqrt2;
    Matrix expected = Matrix::Zero(n + 1, n + 1);
    expected(0, n) = 2.0;
    CHECK((matrix_power(c, n) - expected).norm() <= 1e-12);
  }
}

TEST_CASE("orthogonal_decompose: shift and degenerate cases") {
  const Matrix j = shift_j();
  Vector z(2);
  z << Complex(1.0, 0.0), Complex(1.0, 0.0);
  z /= std::sqrt(2.0);
  const OrthoSplit split = orthogonal_decompose(j, z);
  // R(J^*) = span{e_2}, N(J) = span{e_1}.
  CHECK(std::abs(split.x(0)) <= 1e-14);
  CHECK(std::abs(split.x(1) - z(1)) <= 1e-14);
  CHECK(std::abs(split.y(0) - z(0)) <= 1e-14);
  CHECK(!split.degenerate);

  std::mt19937_64 rng(15);
  Matrix a = random_matrix(4, rng);
  a += 5.0 * Matrix::Identity(4, 4);  // comfortably nonsingular
  const Vector w = random_unit_vector(4, rng);
  const OrthoSplit full = orthogonal_decompose(a, w);
  CHECK((full.x - w).norm() <= 1e-12);
  CHECK(full.y.norm() <= 1e-12);

  const OrthoSplit degenerate = orthogonal_decompose(Matrix::Zero(3, 3),
                                                     Vector::Unit(3, 1));
  CHECK(degenerate.degenerate);
  CHECK(degenerate.x.norm() == 0.0);
  CHECK((degenerate.y - Vector::Unit(3, 1)).norm() == 0.0);
}

TEST_CASE("orthogonal_decompose: x perp y and A y = 0 on truncated-rank input") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index n = 3 + trial % 5;
    const SvdResult s = svd(random_matrix(n, rng));
    RealVector sigma = s.singular_values;
    for (Eigen::Index i = n / 2; i < n; ++i) sigma(i) = 0.0;  // kill the tail
    const Matrix a = s.U * sigma.asDiagonal() * s.V.adjoint();
    const Vector z = random_unit_vector(n, rng);
    const OrthoSplit split = orthogonal_decompose(a, z);
    CHECK(std::abs(inner(split.x, split.y)) <=
          1e-10 * split.x.norm() * split.y.norm() + 1e-14);
    CHECK((a * split.y).norm() <= 1e-10 * spectral_norm(a));
    CHECK((split.x + split.y - z).norm() <= 1e-12);
  }
}

TEST_CASE("orthonormal_complete: base cases and completion") {
  Matrix v1(2, 1);
  v1 << Complex(1.0, 0.0), Complex(0.0, 0.0);
  const Matrix q1 = orthonormal_complete(v1);
  CHECK((q1.col(0) - v1.col(0)).norm() == 0.0);
  CHECK(std::abs(std::abs(q1(1, 1)) - 1.0) <= 1e-14);

  const Matrix empty(3, 0);
  CHECK(orthonormal_complete(empty).isApprox(Matrix::Identity(3, 3)));

  Matrix vh(2, 1);
  vh << Complex(1.0, 0.0), Complex(1.0, 0.0);
  vh /= std::sqrt(2.0);
  const Matrix q = orthonormal_complete(vh);
  CHECK((q.adjoint() * q - Matrix::Identity(2, 2)).norm() <= 1e-10);
  CHECK((q.col(0) - vh.col(0)).norm() == 0.0);

  Matrix skew(3, 2);
  skew.setZero();
  skew(0, 0) = 1.0;
  skew(0, 1) = 1.0;  // not orthonormal
  CHECK_THROWS_AS(orthonormal_complete(skew), Error);
}

TEST_CASE("haar_unitary: determinism and unitarity") {
  const Matrix one = haar_unitary(1, 7);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) <= 1e-14);

  CHECK(haar_unitary(4, 42).isApprox(haar_unitary(4, 42)));
  CHECK(!haar_unitary(4, 42).isApprox(haar_unitary(4, 43)));

  const Matrix q = haar_unitary(5, 123);
  CHECK((q.adjoint() * q - Matrix::Identity(5, 5)).norm() <= 1e-12);
}

TEST_CASE("polarization identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 7;
    const Matrix a = random_matrix(n, rng);
    const Vector z = random_unit_vector(n, rng);
    const Vector w = random_unit_vector(n, rng);
    const Complex i(0.0, 1.0);
    const auto q = [&](const Vector& s) { return inner(a * s, s); };
    const Complex rhs =
        q(z + w) - q(z - w) + i * q(z + i * w) - i * q(z - i * w);
    const Complex lhs = 4.0 * inner(a * z, w);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("parallelogram law") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 7;
    const Vector z = random_unit_vector(n, rng);
    const Vector w = 2.5 * random_unit_vector(n, rng);
    const double lhs = (z + w).squaredNorm() + (z - w).squaredNorm();
    const double rhs = 2.0 * (z.squaredNorm() + w.squaredNorm());
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}
