#include "halfrad/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "halfrad/crouzeix.hpp"
#include "halfrad/fov.hpp"
#include "halfrad/halfradial.hpp"
#include "halfrad/linalg.hpp"
#include "halfrad/matrix_io.hpp"

namespace halfrad {

namespace {

using ordered_json = nlohmann::ordered_json;

SweepOptions sweep_of(const AnalysisOptions& o) {
  return {o.grid_size, o.refine_tol, o.boundary_count};
}

ordered_json header(const Matrix& a, const AnalysisOptions& o) {
  ordered_json doc;
  doc["schema"] = "halfrad-report/1";
  doc["tool_version"] = kVersion;
  doc["input"] = {{"digest", matrix_digest(a)}, {"n", a.rows()}};
  doc["config"] = {{"tau", o.tau},
                   {"eps", o.eps},
                   {"rank_tol", o.rank_tol},
                   {"grid_size", o.grid_size},
                   {"refine_tol", o.refine_tol},
                   {"boundary_count", o.boundary_count},
                   {"seed", o.seed}};
  return doc;
}

ordered_json radius_section(const NumericalRadiusResult& nr,
                            const AnalysisOptions& o) {
  return {{"value", nr.radius},
          {"theta_star", nr.theta_star},
          {"method", "theta_grid+golden_section"},
          {"grid_size", nr.grid_size},
          {"refine_tol", o.refine_tol},
          {"abs_tol", 1e-8}};
}

ordered_json half_radial_section(const HalfRadialReport& rep) {
  ordered_json diag = ordered_json::object();
  for (const char* name : kDiagnosticNames) {
    const auto it = rep.diagnostics.find(name);
    if (it == rep.diagnostics.end()) continue;
    diag[name] = {{"pass", it->second.pass}, {"residual", it->second.residual}};
  }
  return {{"verdict", rep.verdict}, {"borderline", rep.borderline},
          {"gap", rep.gap},         {"tau", rep.tol},
          {"diagnostics", diag}};
}

ordered_json decomposition_section(const CanonicalDecomposition& d) {
  return {{"certified", true},
          {"m", d.m},
          {"sigma", d.sigma},
          {"B_size", d.B.rows()},
          {"B_norm", d.B_norm},
          {"B_radius", d.B_radius},
          {"residual", d.residual},
          {"residual_tol", 1e-8}};
}

ordered_json crabb_section(const CrabbDecomposition& d) {
  return {{"k", d.k},
          {"B_size", d.B.rows()},
          {"b_radius", d.b_radius},
          {"b_power_norm", d.b_power_norm},
          {"residual", d.residual},
          {"residual_tol", 1e-6}};
}

}  // namespace

ordered_json analyze_report(const Matrix& a, const AnalysisOptions& o,
                            int crouzeix_kmax, bool with_decomposition) {
  require_nonzero_n2(a, "analyze");
  ordered_json doc = header(a, o);
  const SweepOptions sweep = sweep_of(o);

  doc["norm"] = {{"value", spectral_norm(a)},
                 {"method", "svd"},
                 {"rel_tol", 1e-12}};
  const NumericalRadiusResult nr =
      numerical_radius(a, o.grid_size, o.refine_tol);
  doc["radius"] = radius_section(nr, o);

  const HalfRadialReport rep = is_half_radial(a, o.tau, o.eps, sweep, o.rank_tol);
  doc["half_radial"] = half_radial_section(rep);

  if (with_decomposition) {
    if (rep.verdict) {
      doc["decomposition"] =
          decomposition_section(canonical_decomposition(a, o.eps, o.tau, sweep));
    } else {
      doc["decomposition"] = {{"certified", false},
                              {"reason", "matrix is not half-radial"}};
    }
  }
  if (crouzeix_kmax > 0)
    doc["crouzeix"] = crouzeix_report(a, o, crouzeix_kmax)["ratios"];
  return doc;
}

ordered_json crouzeix_report(const Matrix& a, const AnalysisOptions& o,
                             int k_max) {
  require_nonzero_n2(a, "crouzeix");
  if (k_max < 1)
    throw Error(ErrorCode::invalid_argument, "k_max must be >= 1");
  ordered_json doc = header(a, o);
  const SweepOptions sweep = sweep_of(o);
  ordered_json rows = ordered_json::array();
  for (int k = 1; k <= k_max; ++k) {
    const Matrix ak = matrix_power(a, k);
    ordered_json row;
    row["k"] = k;
    if (ak.norm() == 0.0) {
      // Nilpotent power: ratio 0, nothing to decompose.
      row["norm_power"] = 0.0;
      const double r = numerical_radius(a, o.grid_size, o.refine_tol).radius;
      row["radius_pow_k"] = std::pow(r, k);
      row["ratio"] = 0.0;
      row["extremal"] = false;
      rows.push_back(std::move(row));
      continue;
    }
    const MonomialExtremality ext = monomial_extremality_test(a, k, o.tau, sweep);
    row["norm_power"] = spectral_norm(ak);
    row["radius_pow_k"] = ext.radius_pow_k;
    row["ratio"] = ext.ratio;
    row["extremal"] = ext.extremal;
    row["ratio_agrees"] = ext.ratio_agrees;
    if (ext.extremal && k + 1 <= a.rows())
      row["crabb"] = crabb_section(crabb_decomposition(a, k, 1e-6, sweep));
    rows.push_back(std::move(row));
  }
  doc["ratios"] = std::move(rows);
  return doc;
}

ordered_json crabb_report(const Matrix& a, const AnalysisOptions& o, int k) {
  require_nonzero_n2(a, "crabb");
  ordered_json doc = header(a, o);
  const SweepOptions sweep = sweep_of(o);
  const CrabbChain chain = crabb_chain(a, k, sweep);
  doc["k"] = k;
  doc["radius"] =
      radius_section(numerical_radius(a, o.grid_size, o.refine_tol), o);
  doc["norm_profile"] = chain.norm_profile;
  doc["profile_tol"] = 1e-6;
  const Matrix gram = chain.Q_k.adjoint() * chain.Q_k;
  doc["orthogonality_residual"] =
      (gram - Matrix::Identity(k + 1, k + 1)).norm();
  doc["decomposition"] = crabb_section(crabb_decomposition(a, k, 1e-6, sweep));
  return doc;
}

ordered_json certify_decomposition_report(const Matrix& a,
                                          const AnalysisOptions& o) {
  require_nonzero_n2(a, "certify-decomposition");
  ordered_json doc = header(a, o);
  const SweepOptions sweep = sweep_of(o);
  try {
    doc["decomposition"] =
        decomposition_section(canonical_decomposition(a, o.eps, o.tau, sweep));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::precondition_failed) throw;
    const HalfRadialReport rep = is_half_radial(a, o.tau, o.eps, sweep, o.rank_tol);
    doc["decomposition"] = {{"certified", false}, {"reason", e.what()}};
    doc["half_radial"] = half_radial_section(rep);
  }
  return doc;
}

ordered_json radius_report(const Matrix& a, const AnalysisOptions& o) {
  require_square(a);
  require_finite(a);
  ordered_json doc = header(a, o);
  const double norm = spectral_norm(a);
  doc["norm"] = {{"value", norm}, {"method", "svd"}, {"rel_tol", 1e-12}};
  doc["radius"] =
      radius_section(numerical_radius(a, o.grid_size, o.refine_tol), o);
  doc["bounds"] = {{"lower_half_norm", 0.5 * norm}, {"upper_norm", norm}};
  return doc;
}

std::string fov_boundary_csv(const Matrix& a, int count) {
  const FovBoundary b = fov_boundary(a, count);
  std::string out = "theta,support,re,im\n";
  char line[160];
  for (const FovSample& s : b.samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", s.theta,
                  s.support, s.point.real(), s.point.imag());
    out += line;
  }
  return out;
}

}  // namespace halfrad
