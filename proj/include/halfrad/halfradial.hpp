#ifndef HALFRAD_HALFRADIAL_HPP
#define HALFRAD_HALFRADIAL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "halfrad/fov.hpp"
#include "halfrad/linalg.hpp"
#include "halfrad/types.hpp"

namespace halfrad {

// Certification of half-radiality (||A|| = 2 r(A)): gap verdict, the
// necessary structural conditions on the maximum singular subspaces, the
// maximizer sets Theta_A / Omega_A, the canonical block decomposition, and
// a synthesizer for test matrices.

struct MaxSingularSubspaces {
  double sigma_max = 0.0;
  int multiplicity = 0;  // m = count of sigma_i >= (1 - eps) sigma_max
  Matrix V_basis;        // n x m, orthonormal columns spanning V_max(A)
  Matrix U_basis;        // n x m, orthonormal columns spanning U_max(A)
  double cluster_tol = 0.0;
};

struct ConditionCheck {
  bool pass = false;
  double residual = 0.0;
};

struct HalfRadialReport {
  bool verdict = false;
  bool borderline = false;  // gap in (tol, 100 tol]: flagged, not certified
  double norm = 0.0;
  double radius = 0.0;
  double gap = 0.0;  // | ||A|| - 2 r(A) | / ||A||
  double tol = 0.0;
  std::map<std::string, ConditionCheck> diagnostics;
};

// Fixed emission order for report diagnostics.
extern const char* const kDiagnosticNames[7];

struct ThetaMembership {
  bool member = false;
  double unit_residual = 0.0;       // | ||z|| - 1 |
  double maximizer_residual = 0.0;  // | |<Az,z>| - r(A) |
  double x_form_residual = 0.0;     // | <Ax,x> |
};

struct MaximizerConditionReport {
  bool satisfied = false;
  double v_range_residual = 0.0;  // distance of v from R(A^*)
  double v_null_residual = 0.0;   // ||A^* v||
  double u_range_residual = 0.0;  // distance of Av/||A|| from R(A)
  double u_null_residual = 0.0;   // ||A u|| for u = Av/||A||
  double maximizer_residual = 0.0;
};

struct MaximizerSample {
  Vector z;  // (e^{i alpha} v + e^{i beta} u) / sqrt(2)
  Vector v;
  Vector u;  // Av / ||A||
  double alpha = 0.0;
  double beta = 0.0;
  Vector x;  // component of z in R(A^*)
  Vector y;  // component of z in N(A)
  Complex gamma;  // <Ax, y>
};

struct CanonicalDecomposition {
  Matrix Q;  // unitary; Q^* A Q = (sigma I_m (x) J) (+) B
  int m = 0;
  double sigma = 0.0;
  Matrix B;  // (n - 2m) x (n - 2m), possibly 0 x 0
  double residual = 0.0;
  double B_norm = 0.0;
  double B_radius = 0.0;
};

MaxSingularSubspaces max_singular_subspaces(const Matrix& a,
                                            double eps = kDefaultClusterTol);

// The five necessary conditions: V_max in N(A^*), U_max in N(A),
// V_max perp U_max, m <= n/2, and zero singular value multiplicity >= m.
// All can hold for a matrix that is not half-radial.
std::map<std::string, ConditionCheck> structural_diagnostics(
    const Matrix& a, double eps = kDefaultClusterTol,
    double tol = kDefaultGapTol);

// Gap verdict plus full diagnostics (populated regardless of the verdict).
HalfRadialReport is_half_radial(const Matrix& a, double tol = kDefaultGapTol,
                                double eps = kDefaultClusterTol,
                                const SweepOptions& sweep = {},
                                double rank_tol = kDefaultRankTol);

// For unit v in V_max(A): verifies v in R(A^*) ^ N(A^*),
// Av in R(A) ^ N(A), and that z = (v + Av/||A||)/sqrt(2) maximizes
// |<Az,z>|. Holds for every such v iff A is half-radial.
MaximizerConditionReport check_maximizer_condition(
    const Matrix& a, const Vector& v, double tol,
    const SweepOptions& sweep = {});

// Element of Omega_A built from v in V_max(A) and phases alpha, beta.
// Requires A half-radial (gap within tol); otherwise the construction is
// not guaranteed to maximize and the call is rejected.
MaximizerSample sample_omega(const Matrix& a, const Vector& v, double alpha,
                             double beta, double tol = kDefaultGapTol,
                             double rank_tol = kDefaultRankTol,
                             const SweepOptions& sweep = {});

// z in Theta_A: unit norm, |<Az,z>| = r(A), and <Ax,x> = 0 for the
// R(A^*)-component x of z.
ThetaMembership is_in_theta(const Matrix& a, const Vector& z, double tol,
                            double rank_tol = kDefaultRankTol,
                            const SweepOptions& sweep = {});

// Unitary similarity to (||A|| I_m (x) J) (+) B with ||B|| < ||A|| and
// r(B) <= ||A||/2. Q interleaves the SVD's own u_i, v_i pairs. Refuses
// matrices that do not certify as half-radial.
CanonicalDecomposition canonical_decomposition(
    const Matrix& a, double eps = kDefaultClusterTol,
    double tol = kDefaultGapTol, const SweepOptions& sweep = {});

// Random half-radial matrix: Haar-conjugated (sigma I_m (x) J) (+) B where
// B is rescaled so r(B) = b_radius_frac * sigma / 2 and ||B|| < sigma.
// Requires 1 <= m <= n/2 and b_radius_frac in [0, 1).
Matrix synthesize_half_radial(int n, int m, double sigma,
                              double b_radius_frac, std::uint64_t seed);

}  // namespace halfrad

#endif
