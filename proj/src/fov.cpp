#include "halfrad/fov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "halfrad/linalg.hpp"

namespace halfrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double support_at(const Matrix& a, double theta,
                  Eigen::SelfAdjointEigenSolver<Matrix>& es) {
  es.compute(rotated_hermitian_part(a, theta), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(a.rows() - 1);
}

// Golden-section maximization on [lo, hi]; returns the best sampled point.
std::pair<double, double> golden_max(const Matrix& a, double lo, double hi,
                                     double tol,
                                     Eigen::SelfAdjointEigenSolver<Matrix>& es) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = support_at(a, x1, es);
  double f2 = support_at(a, x2, es);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = support_at(a, x2, es);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = support_at(a, x1, es);
    }
  }
  return (f1 >= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

struct Run {
  int begin;  // grid index, inclusive
  int end;    // grid index, inclusive; may be < begin when wrapping
  double value;
};

// Group the cyclic grid into plateau runs (consecutive values within
// noise_tol) and keep the runs that beat both neighbors. A support function
// that is flat everywhere (W(A) a centered disk) collapses to one run, so
// it is refined once instead of at every grid point.
std::vector<Run> local_max_runs(const std::vector<double>& g,
                                double noise_tol) {
  const int n = static_cast<int>(g.size());
  std::vector<Run> runs;
  int start = 0;
  // Rotate so index `start` begins a run (not mid-plateau across the seam).
  while (start < n && std::abs(g[(start + n - 1) % n] - g[start]) <= noise_tol)
    ++start;
  if (start == n) {
    // Single plateau covering the whole circle.
    double vmax = *std::max_element(g.begin(), g.end());
    return {{0, n - 1, vmax}};
  }
  int i = start;
  do {
    Run r{i, i, g[i]};
    int j = i;
    while (true) {
      int next = (j + 1) % n;
      if (next == start || std::abs(g[next] - g[j]) > noise_tol) break;
      j = next;
      r.value = std::max(r.value, g[j]);
    }
    r.end = j;
    runs.push_back(r);
    i = (j + 1) % n;
  } while (i != start);

  std::vector<Run> maxima;
  const int m = static_cast<int>(runs.size());
  for (int q = 0; q < m; ++q) {
    const double prev = runs[(q + m - 1) % m].value;
    const double next = runs[(q + 1) % m].value;
    if (runs[q].value >= prev && runs[q].value >= next) maxima.push_back(runs[q]);
  }
  return maxima;
}

}  // namespace

Matrix rotated_hermitian_part(const Matrix& a, double theta) {
  require_square(a);
  require_finite(a);
  const Matrix b = std::polar(1.0, theta) * a;
  return 0.5 * (b + b.adjoint());
}

NumericalRadiusResult numerical_radius(const Matrix& a, int grid_size,
                                       double refine_tol) {
  require_square(a);
  require_finite(a);
  if (grid_size < 64)
    throw Error(ErrorCode::invalid_argument, "grid_size must be >= 64");
  if (!(refine_tol > 0.0))
    throw Error(ErrorCode::invalid_argument, "refine_tol must be positive");

  const Eigen::Index n = a.rows();
  NumericalRadiusResult res;
  res.grid_size = grid_size;
  if (a.norm() == 0.0) {
    res.maximizer = Vector::Unit(n, 0);
    return res;
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es;
  const double h = kTwoPi / grid_size;
  std::vector<double> g(grid_size);
  for (int j = 0; j < grid_size; ++j) g[j] = support_at(a, j * h, es);

  const auto gmax_it = std::max_element(g.begin(), g.end());
  const double noise_tol = 1e-12 * std::max(1.0, std::abs(*gmax_it));

  double best = *gmax_it;
  double best_theta = h * static_cast<double>(gmax_it - g.begin());
  for (const Run& run : local_max_runs(g, noise_tol)) {
    // Bracket the run by its flanking grid points (unwrapped coordinates).
    int len = run.end - run.begin;
    if (len < 0) len += grid_size;
    double lo = (run.begin - 1) * h;
    double hi = (run.begin + len + 1) * h;
    if (len + 2 >= grid_size) {  // plateau covering the circle
      lo = 0.0;
      hi = kTwoPi;
    }
    auto [theta, value] = golden_max(a, lo, hi, refine_tol, es);
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  res.refined = true;
  res.radius = best;
  res.theta_star = std::fmod(best_theta + kTwoPi, kTwoPi);
  es.compute(rotated_hermitian_part(a, res.theta_star));
  res.maximizer = es.eigenvectors().col(n - 1);
  return res;
}

FovBoundary fov_boundary(const Matrix& a, int count) {
  require_square(a);
  require_finite(a);
  if (count < 8)
    throw Error(ErrorCode::invalid_argument,
                "boundary requires at least 8 samples");
  const Eigen::Index n = a.rows();
  FovBoundary b;
  b.samples.reserve(count);
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  for (int j = 0; j < count; ++j) {
    const double theta = kTwoPi * j / count;
    es.compute(rotated_hermitian_part(a, theta));
    const Vector q = es.eigenvectors().col(n - 1);
    b.samples.push_back({theta, es.eigenvalues()(n - 1), rayleigh(a, q)});
  }
  return b;
}

DiskCheckResult fov_disk_check(const Matrix& a, int count, double tol) {
  require_square(a);
  require_finite(a);
  if (count < 64)
    throw Error(ErrorCode::invalid_argument, "disk check requires count >= 64");
  DiskCheckResult res;
  res.norm = spectral_norm(a);
  if (res.norm == 0.0) {
    res.is_disk = true;
    res.note = "zero matrix: W(A) = {0}, trivially the degenerate disk";
    return res;
  }
  const FovBoundary b = fov_boundary(a, count);
  double smin = b.samples[0].support, smax = b.samples[0].support;
  for (const FovSample& s : b.samples) {
    smin = std::min(smin, s.support);
    smax = std::max(smax, s.support);
  }
  res.support_spread = smax - smin;
  res.support_max = smax;
  const bool flat = res.support_spread <= tol * res.norm;
  const bool at_half = std::abs(smax - 0.5 * res.norm) <= tol * res.norm;
  res.is_disk = flat && at_half;
  if (!flat)
    res.note = "support function is not constant over theta";
  else if (!at_half)
    res.note = "disk radius differs from ||A||/2";
  return res;
}

double max_poly_on_fov(const Matrix& a, const std::vector<Complex>& coeffs,
                       int count) {
  if (coeffs.empty())
    throw Error(ErrorCode::invalid_argument, "empty coefficient list");
  const FovBoundary b = fov_boundary(a, count);
  double best = 0.0;
  for (const FovSample& s : b.samples)
    best = std::max(best, std::abs(poly_eval(coeffs, s.point)));
  return best;
}

}  // namespace halfrad
