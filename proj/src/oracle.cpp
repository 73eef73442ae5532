#include "halfrad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "halfrad/linalg.hpp"

namespace halfrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Deliberately local: the oracle keeps its own H_theta assembly so it does
// not share code with the fov sweep it validates.
Matrix rotated_part(const Matrix& a, double theta) {
  const Matrix b = std::polar(1.0, theta) * a;
  return 0.5 * (b + b.adjoint());
}

Vector random_unit(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = Complex(gauss(rng), gauss(rng));
  const double nrm = z.norm();
  return (nrm > 0.0) ? Vector(z / nrm) : Vector(Vector::Unit(n, 0));
}

}  // namespace

OracleResult radius_grid_oracle(const Matrix& a, int n_theta) {
  require_square(a);
  require_finite(a);
  if (a.rows() < 2)
    throw Error(ErrorCode::degenerate_input,
                "grid oracle requires n >= 2 (1x1 is trivial)");
  if (n_theta < 10000)
    throw Error(ErrorCode::invalid_argument,
                "grid oracle requires at least 10^4 angles");

  const Eigen::Index n = a.rows();
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<double> chunk_max(workers, -std::numeric_limits<double>::infinity());
  auto worker = [&](unsigned w) {
    Eigen::SelfAdjointEigenSolver<Matrix> es;
    double best = -std::numeric_limits<double>::infinity();
    for (int j = static_cast<int>(w); j < n_theta;
         j += static_cast<int>(workers)) {
      es.compute(rotated_part(a, kTwoPi * j / n_theta), Eigen::EigenvaluesOnly);
      best = std::max(best, es.eigenvalues()(n - 1));
    }
    chunk_max[w] = best;
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();

  OracleResult res;
  res.value = *std::max_element(chunk_max.begin(), chunk_max.end());
  res.method = OracleMethod::theta_grid;
  res.evaluations = n_theta;
  return res;
}

OracleResult radius_ascent_oracle(const Matrix& a, int restarts, int iters,
                                  std::uint64_t seed) {
  require_square(a);
  require_finite(a);
  if (restarts < 8)
    throw Error(ErrorCode::invalid_argument, "ascent needs >= 8 restarts");
  if (iters < 1)
    throw Error(ErrorCode::invalid_argument, "ascent needs >= 1 iteration");

  const Eigen::Index n = a.rows();
  const Matrix a_adj = a.adjoint();
  // Power steps on the rotated Hermitian part alone cycle whenever its
  // extreme eigenvalues tie in magnitude (the shift J swaps |z_1|, |z_2|
  // forever). The positive shift makes the top eigenvalue dominant, which
  // is Watson's standard repair for this iteration.
  const double shift = 2.0 * a.norm();
  std::mt19937_64 rng(seed);
  OracleResult res;
  res.method = OracleMethod::sphere_ascent;
  res.seed = seed;
  for (int r = 0; r < restarts; ++r) {
    Vector z = random_unit(rng, n);
    for (int it = 0; it < iters; ++it) {
      const Complex w = rayleigh(a, z);
      ++res.evaluations;
      res.value = std::max(res.value, std::abs(w));
      const double phi = (w == Complex(0.0, 0.0)) ? 0.0 : std::arg(w);
      Vector step = std::polar(1.0, -phi) * (a * z) +
                    std::polar(1.0, phi) * (a_adj * z) + shift * z;
      const double nrm = step.norm();
      if (nrm < 1e-300) break;  // stagnated at a critical point
      z = step / nrm;
    }
    res.value = std::max(res.value, std::abs(rayleigh(a, z)));
    ++res.evaluations;
  }
  return res;
}

std::vector<Complex> wa_sample_points(const Matrix& a, int count,
                                      std::uint64_t seed) {
  require_square(a);
  require_finite(a);
  if (count < 1)
    throw Error(ErrorCode::invalid_argument, "count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Complex> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i)
    points.push_back(rayleigh(a, random_unit(rng, a.rows())));
  return points;
}

}  // namespace halfrad
