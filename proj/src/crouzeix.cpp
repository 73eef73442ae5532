#include "halfrad/crouzeix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "halfrad/linalg.hpp"

namespace halfrad {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double two_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

std::vector<Complex> monomial_coeffs(int k) {
  std::vector<Complex> c(k + 1, Complex(0.0, 0.0));
  c[k] = Complex(1.0, 0.0);
  return c;
}

}  // namespace

Matrix ccc_matrix(int n) {
  if (n < 1)
    throw Error(ErrorCode::invalid_argument, "ccc_matrix requires n >= 1");
  Matrix c = Matrix::Zero(n + 1, n + 1);
  if (n == 1) {
    c(0, 1) = 2.0;
    return c;
  }
  c(0, 1) = kSqrt2;
  for (int i = 1; i < n - 1; ++i) c(i, i + 1) = 1.0;
  c(n - 1, n) = kSqrt2;
  return c;
}

CrouzeixRatio crouzeix_monomial_ratio(const Matrix& a, int k,
                                      const SweepOptions& sweep) {
  require_square(a);
  require_finite(a);
  if (a.norm() == 0.0)
    throw Error(ErrorCode::degenerate_input,
                "Crouzeix ratio of the zero matrix is undefined");
  if (k < 1)
    throw Error(ErrorCode::invalid_argument, "monomial degree must be >= 1");

  CrouzeixRatio res;
  res.k = k;
  res.numerator = two_norm(matrix_power(a, k));
  const double r = numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  res.denominator = std::pow(r, k);  // exact for monomials: max |zeta^k| = r^k
  res.ratio = res.numerator / res.denominator;
  res.boundary_sweep = max_poly_on_fov(a, monomial_coeffs(k), sweep.boundary_count);
  // Discretization floor: boundary samples of a disk undershoot the radius
  // by about r (pi/count)^2 / 2, amplified k-fold by the monomial.
  const double disc = std::numbers::pi / sweep.boundary_count;
  const double gate = 1e-3 + 5.0 * k * disc * disc;
  if (std::abs(res.boundary_sweep - res.denominator) > gate * res.denominator)
    throw Error(ErrorCode::numerical_failure,
                "boundary sweep disagrees with r(A)^k beyond discretization "
                "error");
  return res;
}

MonomialExtremality monomial_extremality_test(const Matrix& a, int k,
                                              double tol,
                                              const SweepOptions& sweep) {
  require_nonzero_n2(a, "monomial_extremality_test");
  if (k < 1)
    throw Error(ErrorCode::invalid_argument, "monomial degree must be >= 1");

  MonomialExtremality res;
  const double r = numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  res.radius_pow_k = std::pow(r, k);
  const Matrix ak = matrix_power(a, k);
  if (ak.norm() == 0.0) {
    // A^k = 0 (nilpotent): the ratio is 0, never extremal.
    res.extremal = false;
    res.ratio = 0.0;
    res.power_radius_residual = 1.0;
    res.ratio_agrees = true;
    return res;
  }
  res.power_report = is_half_radial(ak, tol, kDefaultClusterTol, sweep);
  res.radius_of_power =
      numerical_radius(ak, sweep.grid_size, sweep.refine_tol).radius;
  res.power_radius_residual =
      std::abs(res.radius_of_power - res.radius_pow_k) / res.radius_pow_k;
  res.extremal = res.power_report->verdict && res.power_radius_residual <= tol;
  res.ratio = crouzeix_monomial_ratio(a, k, sweep).ratio;
  res.ratio_agrees =
      ((std::abs(res.ratio - 2.0) <= 100.0 * tol) == res.extremal);
  return res;
}

CrabbChain crabb_chain(const Matrix& a, int k, const SweepOptions& sweep) {
  require_nonzero_n2(a, "crabb_chain");
  const Eigen::Index n = a.rows();
  if (k < 1 || k + 1 > n)
    throw Error(ErrorCode::invalid_argument,
                "chain length k+1 must fit the matrix dimension");

  const double r = numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  const Matrix scaled = a / r;
  const Matrix scaled_k = matrix_power(scaled, k);
  const SvdResult s = svd(scaled_k);

  CrabbChain res;
  res.k = k;
  res.v = s.V.col(0);  // first SVD column; any choice works, this one is fixed

  std::vector<Vector> powers(k + 2);
  powers[0] = res.v;
  for (int i = 1; i <= k + 1; ++i) powers[i] = scaled * powers[i - 1];

  res.norm_profile.resize(k + 1);
  res.chain.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    res.chain[i] = powers[k - i];
    res.norm_profile[i] = powers[k - i].norm();
  }

  auto profile_message = [&res]() {
    std::ostringstream os;
    os << "measured norm profile (";
    for (std::size_t i = 0; i < res.norm_profile.size(); ++i)
      os << (i ? ", " : "") << res.norm_profile[i];
    os << ") does not match (2, sqrt2, ..., sqrt2, 1)";
    return os.str();
  };

  constexpr double chain_tol = 1e-6;
  bool valid = std::abs(res.norm_profile.front() - 2.0) <= chain_tol &&
               powers[k + 1].norm() <= chain_tol;
  for (int i = 1; i < k; ++i)
    valid = valid && std::abs(res.norm_profile[i] - kSqrt2) <= chain_tol;
  if (!valid) throw Error(ErrorCode::precondition_failed, profile_message());

  res.Q_k.resize(n, k + 1);
  for (int i = 0; i <= k; ++i)
    res.Q_k.col(i) = res.chain[i] / res.norm_profile[i];

  const Matrix gram = res.Q_k.adjoint() * res.Q_k;
  if ((gram - Matrix::Identity(k + 1, k + 1)).norm() > chain_tol)
    throw Error(ErrorCode::precondition_failed,
                "chain vectors are not mutually orthogonal; " +
                    profile_message());
  return res;
}

CrabbDecomposition crabb_decomposition(const Matrix& a, int k, double tol,
                                       const SweepOptions& sweep) {
  require_nonzero_n2(a, "crabb_decomposition");
  const Eigen::Index n = a.rows();
  if (k < 1 || k + 1 > n)
    throw Error(ErrorCode::invalid_argument,
                "block size k+1 must fit the matrix dimension");

  const CrouzeixRatio ratio = crouzeix_monomial_ratio(a, k, sweep);
  if (std::abs(ratio.ratio - 2.0) > std::max(tol, 1e-6)) {
    std::ostringstream os;
    os << "||A^k|| = 2 r(A)^k fails at k = " << k << ": ratio " << ratio.ratio;
    throw Error(ErrorCode::precondition_failed, os.str());
  }

  const CrabbChain chain = crabb_chain(a, k, sweep);
  const double r = numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  const Matrix scaled = a / r;

  // The chain span must reduce A~; otherwise the Crabb structure has
  // broken down numerically.
  const Matrix t = scaled * chain.Q_k;
  const double reduce_residual =
      two_norm(t - chain.Q_k * (chain.Q_k.adjoint() * t));
  if (reduce_residual > tol)
    throw Error(ErrorCode::numerical_failure,
                "chain span is not an invariant subspace within tolerance");

  CrabbDecomposition res;
  res.k = k;
  res.Q_full = orthonormal_complete(chain.Q_k);
  const auto rest = res.Q_full.rightCols(n - k - 1);
  res.B = rest.adjoint() * scaled * rest;

  Matrix target = Matrix::Zero(n, n);
  target.topLeftCorner(k + 1, k + 1) = ccc_matrix(k);
  if (res.B.size() > 0)
    target.bottomRightCorner(n - k - 1, n - k - 1) = res.B;
  res.residual = (scaled * res.Q_full - res.Q_full * target).norm();
  if (res.B.size() > 0) {
    res.b_radius =
        numerical_radius(res.B, sweep.grid_size, sweep.refine_tol).radius;
    res.b_power_norm = two_norm(matrix_power(res.B, k));
  }
  if (res.residual > tol)
    throw Error(ErrorCode::numerical_failure,
                "decomposition residual exceeds tolerance");
  return res;
}

CrouzeixRatio crouzeix_poly_ratio(const Matrix& a,
                                  const std::vector<Complex>& coeffs,
                                  const SweepOptions& sweep) {
  require_square(a);
  require_finite(a);
  if (a.norm() == 0.0)
    throw Error(ErrorCode::degenerate_input,
                "Crouzeix ratio of the zero matrix is undefined");
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree >= 0 && coeffs[degree] == Complex(0.0, 0.0)) --degree;
  if (degree < 0)
    throw Error(ErrorCode::invalid_argument, "zero polynomial");
  if (degree < 1)
    throw Error(ErrorCode::invalid_argument,
                "polynomial degree must be >= 1");

  const Eigen::Index n = a.rows();
  Matrix p = coeffs[degree] * Matrix::Identity(n, n);
  for (int i = degree - 1; i >= 0; --i) {
    p = p * a;
    p += coeffs[i] * Matrix::Identity(n, n);
  }

  CrouzeixRatio res;
  res.coeffs = coeffs;
  res.numerator = two_norm(p);
  res.denominator = max_poly_on_fov(a, coeffs, sweep.boundary_count);
  res.boundary_sweep = res.denominator;
  if (res.denominator <= 0.0) {
    if (res.numerator <= 1e-14) {
      res.ratio = 0.0;
      return res;
    }
    throw Error(ErrorCode::numerical_failure,
                "polynomial vanishes on all boundary samples of W(A)");
  }
  res.ratio = res.numerator / res.denominator;
  int nonzero_terms = 0;
  for (const Complex& c : coeffs)
    if (c != Complex(0.0, 0.0)) ++nonzero_terms;
  res.nonmonomial_at_bound =
      nonzero_terms > 1 && std::abs(res.ratio - 2.0) <= 1e-6;
  return res;
}

}  // namespace halfrad
