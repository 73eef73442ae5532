#ifndef HALFRAD_FOV_HPP
#define HALFRAD_FOV_HPP

#include <string>
#include <vector>

#include "halfrad/types.hpp"

namespace halfrad {

// Knobs for the theta sweep shared by the higher-level certification
// routines. Defaults give sub-1e-8 radius accuracy on n <= 100 matrices.
struct SweepOptions {
  int grid_size = kDefaultGridSize;
  double refine_tol = kDefaultRefineTol;
  int boundary_count = kDefaultBoundaryCount;
};

struct FovSample {
  double theta;    // in [0, 2pi)
  double support;  // lambda_max(H_theta)
  Complex point;   // <A q, q> for a top eigenvector q of H_theta
};

struct FovBoundary {
  std::vector<FovSample> samples;
};

struct NumericalRadiusResult {
  double radius = 0.0;
  double theta_star = 0.0;
  Vector maximizer;  // unit vector with |<Az,z>| = radius
  int grid_size = 0;
  bool refined = false;
};

struct DiskCheckResult {
  bool is_disk = false;
  double support_spread = 0.0;  // max_j support_j - min_j support_j
  double support_max = 0.0;
  double norm = 0.0;
  std::string note;
};

// H_theta = (e^{i theta} A + e^{-i theta} A^*) / 2, Hermitian by
// construction (conjugate entry pairs are averaged exactly).
Matrix rotated_hermitian_part(const Matrix& a, double theta);

// r(A) = max_theta lambda_max(H_theta). Evaluates the support function on a
// uniform grid, locates every grid-local maximum (plateau runs counted
// once), and polishes each with golden-section search to theta-width
// refine_tol.
NumericalRadiusResult numerical_radius(const Matrix& a,
                                       int grid_size = kDefaultGridSize,
                                       double refine_tol = kDefaultRefineTol);

// Support-function sweep: theta_j = 2 pi j / count. The hull of the points
// approximates W(A) from inside, the half-plane intersection from outside.
FovBoundary fov_boundary(const Matrix& a, int count = kDefaultBoundaryCount);

// Is W(A) the disk centered at zero of radius ||A||/2? True iff the support
// values are flat to tol*||A|| and their level sits at ||A||/2.
DiskCheckResult fov_disk_check(const Matrix& a,
                               int count = kDefaultBoundaryCount,
                               double tol = kDefaultGapTol);

// max |p(zeta)| over boundary samples of W(A); coeffs[i] multiplies zeta^i.
// The maximum over the compact convex W(A) is attained on the boundary.
double max_poly_on_fov(const Matrix& a, const std::vector<Complex>& coeffs,
                       int count = kDefaultBoundaryCount);

}  // namespace halfrad

#endif
