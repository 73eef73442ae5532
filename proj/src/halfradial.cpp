#include "halfrad/halfradial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace halfrad {

namespace {

constexpr double kSqrt2Inv = 0.7071067811865476;

double two_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

MaxSingularSubspaces subspaces_from(const SvdResult& s, double eps) {
  MaxSingularSubspaces out;
  out.sigma_max = s.singular_values(0);
  out.cluster_tol = eps;
  Eigen::Index m = 0;
  while (m < s.singular_values.size() &&
         s.singular_values(m) >= (1.0 - eps) * out.sigma_max)
    ++m;
  out.multiplicity = static_cast<int>(m);
  out.V_basis = s.V.leftCols(m);
  out.U_basis = s.U.leftCols(m);
  return out;
}

std::map<std::string, ConditionCheck> diagnostics_from(const Matrix& a,
                                                       const SvdResult& s,
                                                       double eps, double tol) {
  const Eigen::Index n = a.rows();
  const MaxSingularSubspaces sub = subspaces_from(s, eps);
  const double norm = sub.sigma_max;
  const int m = sub.multiplicity;

  std::map<std::string, ConditionCheck> d;
  const double v_null = two_norm(a.adjoint() * sub.V_basis);
  d["vmax_in_null_Astar"] = {v_null <= tol * norm, v_null};
  const double u_null = two_norm(a * sub.U_basis);
  d["umax_in_null_A"] = {u_null <= tol * norm, u_null};
  const double cross = two_norm(sub.U_basis.adjoint() * sub.V_basis);
  d["subspace_orthogonality"] = {cross <= tol, cross};
  const double mult_excess = std::max(0.0, 2.0 * m - static_cast<double>(n));
  d["mult_le_half_n"] = {2 * m <= n, mult_excess};
  Eigen::Index zeros = 0;
  for (Eigen::Index i = 0; i < s.singular_values.size(); ++i)
    if (s.singular_values(i) <= eps * norm) ++zeros;
  d["zero_mult_ge_m"] = {zeros >= m, std::max(0.0, static_cast<double>(m - zeros))};
  return d;
}

ThetaMembership theta_membership(const Matrix& a, const Vector& z, double tol,
                                 double rank_tol, double norm, double radius) {
  ThetaMembership out;
  out.unit_residual = std::abs(z.norm() - 1.0);
  out.maximizer_residual = std::abs(std::abs(rayleigh(a, z)) - radius);
  const OrthoSplit split = orthogonal_decompose(a, z, rank_tol);
  out.x_form_residual = std::abs(split.x.dot(a * split.x));
  out.member = out.unit_residual <= tol &&
               out.maximizer_residual <= tol * std::max(1.0, radius) &&
               out.x_form_residual <= tol * norm;
  return out;
}

}  // namespace

const char* const kDiagnosticNames[7] = {
    "theta_nonempty",     "vmax_in_null_Astar", "umax_in_null_A",
    "subspace_orthogonality", "mult_le_half_n", "zero_mult_ge_m",
    "disk_check"};

MaxSingularSubspaces max_singular_subspaces(const Matrix& a, double eps) {
  require_square(a);
  require_finite(a);
  if (!(eps > 0.0 && eps < 1.0))
    throw Error(ErrorCode::invalid_argument,
                "cluster tolerance must lie in (0, 1)");
  if (a.norm() == 0.0)
    throw Error(ErrorCode::degenerate_input,
                "maximum singular subspaces of the zero matrix are undefined");
  return subspaces_from(svd(a), eps);
}

std::map<std::string, ConditionCheck> structural_diagnostics(const Matrix& a,
                                                             double eps,
                                                             double tol) {
  require_square(a);
  require_finite(a);
  if (a.norm() == 0.0)
    throw Error(ErrorCode::degenerate_input,
                "structural diagnostics need a nonzero matrix");
  return diagnostics_from(a, svd(a), eps, tol);
}

HalfRadialReport is_half_radial(const Matrix& a, double tol, double eps,
                                const SweepOptions& sweep, double rank_tol) {
  require_nonzero_n2(a, "is_half_radial");
  if (!(tol > 0.0 && tol < 1.0))
    throw Error(ErrorCode::invalid_argument, "tolerance must lie in (0, 1)");

  const SvdResult s = svd(a);
  HalfRadialReport rep;
  rep.tol = tol;
  rep.norm = s.singular_values(0);
  const NumericalRadiusResult nr =
      numerical_radius(a, sweep.grid_size, sweep.refine_tol);
  rep.radius = nr.radius;
  rep.gap = std::abs(rep.norm - 2.0 * rep.radius) / rep.norm;
  rep.verdict = rep.gap <= tol;
  rep.borderline = !rep.verdict && rep.gap <= 100.0 * tol;

  rep.diagnostics = diagnostics_from(a, s, eps, tol);

  // Theta_A is non-empty iff the canonical maximizer built from any
  // maximum right singular vector lands in it.
  const Vector v = s.V.col(0);
  const Vector z = kSqrt2Inv * (v + (a * v) / rep.norm);
  const ThetaMembership tm =
      theta_membership(a, z, tol, rank_tol, rep.norm, rep.radius);
  const double theta_residual =
      std::max({tm.unit_residual,
                tm.maximizer_residual / std::max(1.0, rep.radius),
                tm.x_form_residual / rep.norm});
  rep.diagnostics["theta_nonempty"] = {tm.member, theta_residual};

  const DiskCheckResult disk = fov_disk_check(a, sweep.boundary_count, tol);
  const double disk_residual =
      std::max(disk.support_spread,
               std::abs(disk.support_max - 0.5 * rep.norm)) /
      rep.norm;
  rep.diagnostics["disk_check"] = {disk.is_disk, disk_residual};
  return rep;
}

MaximizerConditionReport check_maximizer_condition(const Matrix& a,
                                                   const Vector& v, double tol,
                                                   const SweepOptions& sweep) {
  require_nonzero_n2(a, "check_maximizer_condition");
  if (v.size() != a.rows())
    throw Error(ErrorCode::invalid_argument, "vector dimension mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-8)
    throw Error(ErrorCode::invalid_argument, "v must have unit norm");
  const double norm = spectral_norm(a);
  // v in V_max(A) means ||Av|| = ||A|| for unit v.
  if (norm - (a * v).norm() > std::max(tol, 1e-8) * norm)
    throw Error(ErrorCode::invalid_argument,
                "v is not a maximum right singular vector within tolerance");

  MaximizerConditionReport rep;
  const OrthoSplit sv = orthogonal_decompose(a, v);
  rep.v_range_residual = sv.y.norm();
  rep.v_null_residual = (a.adjoint() * v).norm();
  const Vector u = (a * v) / norm;
  const OrthoSplit su = orthogonal_decompose(a.adjoint(), u);
  rep.u_range_residual = su.y.norm();
  rep.u_null_residual = (a * u).norm();
  const Vector z = kSqrt2Inv * (v + u);
  const double radius =
      numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  rep.maximizer_residual = std::abs(std::abs(rayleigh(a, z)) - radius);
  rep.satisfied = rep.v_range_residual <= tol &&
                  rep.v_null_residual <= tol * norm &&
                  rep.u_range_residual <= tol &&
                  rep.u_null_residual <= tol * norm &&
                  rep.maximizer_residual <= tol * norm;
  return rep;
}

MaximizerSample sample_omega(const Matrix& a, const Vector& v, double alpha,
                             double beta, double tol, double rank_tol,
                             const SweepOptions& sweep) {
  require_nonzero_n2(a, "sample_omega");
  if (v.size() != a.rows())
    throw Error(ErrorCode::invalid_argument, "vector dimension mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-8)
    throw Error(ErrorCode::invalid_argument, "v must have unit norm");
  const double norm = spectral_norm(a);
  const double radius =
      numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  const double gap = std::abs(norm - 2.0 * radius) / norm;
  if (gap > tol) {
    std::ostringstream os;
    os << "Omega_A samples are maximizers only for half-radial matrices; "
       << "gap " << gap << " exceeds tolerance " << tol;
    throw Error(ErrorCode::precondition_failed, os.str());
  }
  if (norm - (a * v).norm() > 1e-8 * norm)
    throw Error(ErrorCode::invalid_argument,
                "v is not in V_max(A) within 1e-8");

  MaximizerSample s;
  s.v = v;
  s.u = (a * v) / norm;
  s.alpha = alpha;
  s.beta = beta;
  s.z = kSqrt2Inv *
        (std::polar(1.0, alpha) * v + std::polar(1.0, beta) * s.u);
  const OrthoSplit split = orthogonal_decompose(a, s.z, rank_tol);
  s.x = split.x;
  s.y = split.y;
  s.gamma = s.y.dot(a * s.x);  // <Ax, y>
  return s;
}

ThetaMembership is_in_theta(const Matrix& a, const Vector& z, double tol,
                            double rank_tol, const SweepOptions& sweep) {
  require_square(a);
  require_finite(a);
  if (z.size() != a.rows())
    throw Error(ErrorCode::invalid_argument, "vector dimension mismatch");
  const double norm = spectral_norm(a);
  if (norm == 0.0) {
    // W(0) = {0}: every unit vector maximizes trivially.
    ThetaMembership out;
    out.unit_residual = std::abs(z.norm() - 1.0);
    out.member = out.unit_residual <= tol;
    return out;
  }
  const double radius =
      numerical_radius(a, sweep.grid_size, sweep.refine_tol).radius;
  return theta_membership(a, z, tol, rank_tol, norm, radius);
}

CanonicalDecomposition canonical_decomposition(const Matrix& a, double eps,
                                               double tol,
                                               const SweepOptions& sweep) {
  require_nonzero_n2(a, "canonical_decomposition");
  const HalfRadialReport rep = is_half_radial(a, tol, eps, sweep);
  if (!rep.verdict) {
    std::ostringstream os;
    os << "matrix is not half-radial: gap " << rep.gap << " > tolerance "
       << tol << " (||A|| = " << rep.norm << ", r(A) = " << rep.radius << ")";
    throw Error(ErrorCode::precondition_failed, os.str());
  }

  const Eigen::Index n = a.rows();
  const SvdResult s = svd(a);
  const MaxSingularSubspaces sub = subspaces_from(s, eps);
  const int m = sub.multiplicity;

  Matrix interleaved(n, 2 * m);
  for (int i = 0; i < m; ++i) {
    interleaved.col(2 * i) = sub.U_basis.col(i);
    interleaved.col(2 * i + 1) = sub.V_basis.col(i);
  }
  const double cross =
      (interleaved.adjoint() * interleaved - Matrix::Identity(2 * m, 2 * m))
          .norm();
  if (cross > 1e-8)
    throw Error(ErrorCode::numerical_failure,
                "interleaved singular vectors are not orthonormal; the "
                "matrix lacks the half-radial block structure");

  CanonicalDecomposition out;
  out.m = m;
  out.sigma = sub.sigma_max;
  out.Q = orthonormal_complete(interleaved);
  const auto p = out.Q.rightCols(n - 2 * m);
  out.B = p.adjoint() * a * p;

  Matrix target = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) target(2 * i, 2 * i + 1) = out.sigma;
  if (out.B.size() > 0)
    target.bottomRightCorner(n - 2 * m, n - 2 * m) = out.B;
  out.residual = (out.Q.adjoint() * a * out.Q - target).norm();
  if (out.B.size() > 0) {
    out.B_norm = two_norm(out.B);
    out.B_radius =
        numerical_radius(out.B, sweep.grid_size, sweep.refine_tol).radius;
  }
  if (out.residual > 10.0 * tol * out.sigma)
    throw Error(ErrorCode::numerical_failure,
                "decomposition residual exceeds bound; certification and "
                "structure disagree");
  return out;
}

Matrix synthesize_half_radial(int n, int m, double sigma, double b_radius_frac,
                              std::uint64_t seed) {
  if (n < 2)
    throw Error(ErrorCode::invalid_argument, "need n >= 2");
  if (m < 1 || 2 * m > n)
    throw Error(ErrorCode::invalid_argument,
                "the multiplicity of sigma_max must satisfy 1 <= m <= n/2");
  if (!(sigma > 0.0))
    throw Error(ErrorCode::invalid_argument, "sigma must be positive");
  if (!(b_radius_frac >= 0.0 && b_radius_frac < 1.0))
    throw Error(ErrorCode::invalid_argument,
                "b_radius_frac must lie in [0, 1)");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int nb = n - 2 * m;

  Matrix b = Matrix::Zero(nb, nb);
  if (nb > 0 && b_radius_frac > 0.0) {
    // Scaling pins r(B) exactly; ||B|| < sigma then follows from
    // ||B|| <= 2 r(B), but the resample guard keeps both constraints
    // checked explicitly.
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
      Matrix g(nb, nb);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
      const double rg = numerical_radius(g).radius;
      if (rg <= 0.0) continue;
      b = g * (b_radius_frac * sigma / 2.0 / rg);
      ok = two_norm(b) < sigma;
    }
    if (!ok)
      throw Error(ErrorCode::numerical_failure,
                  "could not draw B with ||B|| < sigma in 100 attempts");
  }

  Matrix base = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) base(2 * i, 2 * i + 1) = sigma;
  if (nb > 0) base.bottomRightCorner(nb, nb) = b;

  const Matrix q = haar_unitary(n, rng());
  const Matrix result = q * base * q.adjoint();
  const HalfRadialReport check = is_half_radial(result);
  if (!check.verdict)
    throw Error(ErrorCode::numerical_failure,
                "synthesized matrix failed its own certification");
  return result;
}

}  // namespace halfrad
