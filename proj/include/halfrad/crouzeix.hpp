#ifndef HALFRAD_CROUZEIX_HPP
#define HALFRAD_CROUZEIX_HPP

#include <optional>
#include <vector>

#include "halfrad/fov.hpp"
#include "halfrad/halfradial.hpp"
#include "halfrad/types.hpp"

namespace halfrad {

// Crouzeix ratio evaluation ||p(A)|| / max_{zeta in W(A)} |p(zeta)|,
// the Crabb-Choi-Crouzeix matrix, and recovery of the r(A)(C_k (+) B)
// block form of matrices attaining ratio 2 for a monomial.

struct CrouzeixRatio {
  int k = 0;                    // monomial degree; 0 for a general polynomial
  std::vector<Complex> coeffs;  // ascending degree; empty for monomials
  double numerator = 0.0;       // ||p(A)||
  double denominator = 0.0;     // max |p| over W(A)
  double ratio = 0.0;
  double boundary_sweep = 0.0;  // cross-check value from the boundary sweep
  // A non-monomial polynomial within 1e-6 of ratio 2 is reported as
  // noteworthy; no semantic status is attached to the event.
  bool nonmonomial_at_bound = false;
};

struct MonomialExtremality {
  bool extremal = false;
  std::optional<HalfRadialReport> power_report;  // is_half_radial(A^k)
  double radius_of_power = 0.0;                  // r(A^k)
  double radius_pow_k = 0.0;                     // r(A)^k
  double power_radius_residual = 0.0;  // |r(A^k) - r(A)^k| / r(A)^k
  double ratio = 0.0;                  // ||A^k|| / r(A)^k
  bool ratio_agrees = false;           // (ratio ~ 2) matches the verdict
};

struct CrabbChain {
  int k = 0;
  Vector v;                   // maximum right singular vector of A~^k
  std::vector<Vector> chain;  // [A~^k v, A~^{k-1} v, ..., A~ v, v]
  Matrix Q_k;                 // n x (k+1), orthonormal columns
  std::vector<double> norm_profile;  // (2, sqrt2, ..., sqrt2, 1) when valid
};

struct CrabbDecomposition {
  int k = 0;
  Matrix Q_full;
  Matrix B;  // (n - 1 - k) x (n - 1 - k)
  double residual = 0.0;      // ||A~ Q - Q (C_k (+) B)||_F
  double b_radius = 0.0;      // r(B) <= 1
  double b_power_norm = 0.0;  // ||B^k|| <= 2
};

// (n+1) x (n+1) bidiagonal matrix with superdiagonal
// (sqrt2, 1, ..., 1, sqrt2); C_1 = 2J.
Matrix ccc_matrix(int n);

// numerator ||A^k||, denominator r(A)^k (exact for monomials); the
// boundary sweep is kept as a cross-check only.
CrouzeixRatio crouzeix_monomial_ratio(const Matrix& a, int k,
                                      const SweepOptions& sweep = {});

// ||A^k|| = 2 max |zeta^k| over W(A) iff A^k is half-radial and
// r(A^k) = r(A)^k; both legs are tested and compared with the ratio.
MonomialExtremality monomial_extremality_test(const Matrix& a, int k,
                                              double tol = kDefaultGapTol,
                                              const SweepOptions& sweep = {});

// Crabb vector chain for A~ = A / r(A): built from the maximum right
// singular vector v of A~^k. Valid only when ||A~^k|| = 2; violations of
// the norm profile are reported with the measured values.
CrabbChain crabb_chain(const Matrix& a, int k, const SweepOptions& sweep = {});

// Completes the chain to a unitary Q and reads off B with r(B) <= 1 and
// ||B^k|| <= 2, so that A~ = Q (C_k (+) B) Q^*.
CrabbDecomposition crabb_decomposition(const Matrix& a, int k,
                                       double tol = 1e-6,
                                       const SweepOptions& sweep = {});

// General polynomial ratio; coeffs[i] multiplies zeta^i, degree >= 1.
CrouzeixRatio crouzeix_poly_ratio(const Matrix& a,
                                  const std::vector<Complex>& coeffs,
                                  const SweepOptions& sweep = {});

}  // namespace halfrad

#endif
