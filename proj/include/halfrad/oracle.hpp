#ifndef HALFRAD_ORACLE_HPP
#define HALFRAD_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "halfrad/types.hpp"

namespace halfrad {

// Brute-force references for r(A), kept independent of the fov module so
// they can validate it. The grid oracle is the equality oracle; the ascent
// oracle is a lower bound only (it may stagnate at non-global critical
// points and is mitigated by restarts).

enum class OracleMethod { theta_grid, sphere_ascent };

struct OracleResult {
  double value = 0.0;
  OracleMethod method = OracleMethod::theta_grid;
  long evaluations = 0;
  std::uint64_t seed = 0;  // ascent only
};

// max over n_theta uniform angles of lambda_max(H_theta), full Hermitian
// eigendecomposition per angle, no refinement. Error O(||A|| (2pi/N)^2)
// near smooth maxima. Requires n >= 2 and n_theta >= 10^4.
OracleResult radius_grid_oracle(const Matrix& a, int n_theta);

// From each random unit start iterate the shifted ascent step
//   z <- normalize(e^{-i phi} A z + e^{i phi} A^* z + c z),  phi = arg <Az,z>,
// with c = 2 ||A||_F, and keep the best |<Az,z>| seen.
OracleResult radius_ascent_oracle(const Matrix& a, int restarts = 32,
                                  int iters = 500, std::uint64_t seed = 0);

// <Az,z> for random unit z; every returned point is a certified element
// of W(A).
std::vector<Complex> wa_sample_points(const Matrix& a, int count,
                                      std::uint64_t seed);

}  // namespace halfrad

#endif
