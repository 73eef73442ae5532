#ifndef HALFRAD_TEST_SUPPORT_HPP
#define HALFRAD_TEST_SUPPORT_HPP

#include <random>

#include "halfrad/types.hpp"

namespace halfrad::testing {

// The 2x2 shift: the prototypical half-radial matrix.
inline Matrix shift_j() {
  Matrix j = Matrix::Zero(2, 2);
  j(0, 1) = 1.0;
  return j;
}

// All five structural conditions hold yet the matrix is not half-radial
// (r = 0.9, ||A|| = 1): structure alone never certifies.
inline Matrix structure_only_fixture() {
  Matrix a = Matrix::Zero(3, 3);
  a(1, 1) = 0.9;
  a(2, 0) = 1.0;
  return a;
}

// Half-radial with an extra maximizer e_3 that is not in Theta_A.
inline Matrix extra_maximizer_fixture() {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 1) = 1.0;
  a(2, 2) = 0.5;
  return a;
}

inline Matrix random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

inline Vector random_unit_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = Complex(gauss(rng), gauss(rng));
  return z / z.norm();
}

inline Matrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  const Matrix a = random_matrix(n, rng);
  return 0.5 * (a + a.adjoint());
}

}  // namespace halfrad::testing

#endif
