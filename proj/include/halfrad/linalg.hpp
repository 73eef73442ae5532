#ifndef HALFRAD_LINALG_HPP
#define HALFRAD_LINALG_HPP

#include <cstdint>
#include <utility>

#include "halfrad/types.hpp"

namespace halfrad {

struct SvdResult {
  Matrix U;                    // unitary, left singular vectors
  RealVector singular_values;  // non-increasing, non-negative
  Matrix V;                    // unitary, right singular vectors
};

// z = x + y with x in R(A^*) and y in N(A); the split is unique.
struct OrthoSplit {
  Vector x;
  Vector y;
  bool degenerate = false;  // A = 0: R(A^*) = {0}, so x = 0, y = z
};

// Full SVD A = U diag(sigma) V^*. No rank decisions are made here;
// thresholding is the caller's job.
SvdResult svd(const Matrix& a);

// Largest eigenvalue and a unit eigenvector of a Hermitian matrix.
// Rejects inputs with ||H - H^*||_F > 1e-10 ||H||_F.
std::pair<double, Vector> hermitian_eigmax(const Matrix& h);

// sigma_max(A), i.e. the matrix 2-norm.
double spectral_norm(const Matrix& a);

// Plain repeated product; k = 0 gives the identity.
Matrix matrix_power(const Matrix& a, int k);

// Split z against the row space of A: x = P z where P projects onto the
// span of right singular vectors with sigma_i > rank_tol * sigma_max.
OrthoSplit orthogonal_decompose(const Matrix& a, const Vector& z,
                                double rank_tol = kDefaultRankTol);

// Extend k orthonormal columns (n x k) to an n x n unitary whose first k
// columns are exactly the input.
Matrix orthonormal_complete(const Matrix& v);

// Haar-distributed random unitary: complex Gaussian sample, QR, then the
// R-diagonal phase correction. Deterministic for a fixed seed.
Matrix haar_unitary(int n, std::uint64_t seed);

}  // namespace halfrad

#endif
