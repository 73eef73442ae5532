#include "halfrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace halfrad {

void require_square(const Matrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    std::ostringstream os;
    os << "expected a square matrix with n >= 1, got " << a.rows() << "x"
       << a.cols();
    throw Error(ErrorCode::invalid_argument, os.str());
  }
}

void require_finite(const Matrix& a) {
  if (!a.allFinite())
    throw Error(ErrorCode::invalid_argument,
                "matrix has a non-finite entry (NaN or Inf)");
}

void require_nonzero_n2(const Matrix& a, const char* where) {
  require_square(a);
  require_finite(a);
  if (a.rows() < 2 || a.norm() == 0.0) {
    std::ostringstream os;
    os << where << ": requires a nonzero matrix with n >= 2 "
       << "(for the zero matrix or n = 1 the statements are trivial)";
    throw Error(ErrorCode::degenerate_input, os.str());
  }
}

SvdResult svd(const Matrix& a) {
  require_square(a);
  require_finite(a);
  Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

std::pair<double, Vector> hermitian_eigmax(const Matrix& h) {
  require_square(h);
  require_finite(h);
  const double scale = h.norm();
  if ((h - h.adjoint()).norm() > 1e-10 * scale)
    throw Error(ErrorCode::invalid_argument,
                "matrix is not Hermitian within 1e-10 (Frobenius, relative)");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::numerical_failure,
                "Hermitian eigendecomposition did not converge");
  const Eigen::Index last = h.rows() - 1;
  return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

double spectral_norm(const Matrix& a) { return svd(a).singular_values(0); }

Matrix matrix_power(const Matrix& a, int k) {
  require_square(a);
  require_finite(a);
  if (k < 0)
    throw Error(ErrorCode::invalid_argument, "matrix power requires k >= 0");
  Matrix acc = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

OrthoSplit orthogonal_decompose(const Matrix& a, const Vector& z,
                                double rank_tol) {
  require_square(a);
  require_finite(a);
  if (z.size() != a.rows())
    throw Error(ErrorCode::invalid_argument,
                "vector length does not match the matrix dimension");
  if (!(rank_tol > 0.0 && rank_tol < 1.0))
    throw Error(ErrorCode::invalid_argument, "rank_tol must lie in (0, 1)");
  const SvdResult s = svd(a);
  const double sigma_max = s.singular_values(0);
  if (sigma_max == 0.0) return {Vector::Zero(z.size()), z, true};
  Eigen::Index rank = 0;
  while (rank < s.singular_values.size() &&
         s.singular_values(rank) > rank_tol * sigma_max)
    ++rank;
  const auto vr = s.V.leftCols(rank);
  Vector x = vr * (vr.adjoint() * z);
  return {x, z - x, false};
}

Matrix orthonormal_complete(const Matrix& v) {
  const Eigen::Index n = v.rows();
  const Eigen::Index k = v.cols();
  if (n < 1 || k > n)
    throw Error(ErrorCode::invalid_argument,
                "need an n x k block of columns with k <= n");
  if (k == 0) return Matrix::Identity(n, n);
  require_finite(v);
  const double ortho_residual =
      (v.adjoint() * v - Matrix::Identity(k, k)).norm();
  if (ortho_residual > 1e-8)
    throw Error(ErrorCode::invalid_argument,
                "input columns are not orthonormal within 1e-8");
  Matrix q(n, n);
  if (k == n) {
    q = v;
  } else {
    // The trailing left singular vectors of v span the orthogonal
    // complement of its column space.
    Eigen::JacobiSVD<Matrix> solver(v, Eigen::ComputeFullU);
    q << v, solver.matrixU().rightCols(n - k);
  }
  if ((q.adjoint() * q - Matrix::Identity(n, n)).norm() > 1e-10)
    throw Error(ErrorCode::numerical_failure,
                "completed matrix failed the unitarity check at 1e-10");
  return q;
}

Matrix haar_unitary(int n, std::uint64_t seed) {
  if (n < 1)
    throw Error(ErrorCode::invalid_argument, "haar_unitary requires n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of diag(R) to be positive makes Q Haar-distributed.
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double m = std::abs(d);
    q.col(i) *= (m > 0.0) ? d / m : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace halfrad
