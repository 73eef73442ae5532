#include "halfrad.h"

#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "halfrad/analysis.hpp"
#include "halfrad/crouzeix.hpp"
#include "halfrad/fov.hpp"
#include "halfrad/halfradial.hpp"
#include "halfrad/linalg.hpp"
#include "halfrad/matrix_io.hpp"
#include "halfrad/types.hpp"

struct hr_matrix {
  halfrad::Matrix entries;
  halfrad::Metadata metadata;
};

namespace {

thread_local std::string g_last_error;

hr_status status_of(halfrad::ErrorCode code) {
  switch (code) {
    case halfrad::ErrorCode::invalid_argument:
      return HR_ERR_INVALID_ARGUMENT;
    case halfrad::ErrorCode::parse_error:
      return HR_ERR_PARSE;
    case halfrad::ErrorCode::degenerate_input:
      return HR_ERR_DEGENERATE_INPUT;
    case halfrad::ErrorCode::precondition_failed:
      return HR_ERR_PRECONDITION;
    case halfrad::ErrorCode::numerical_failure:
      return HR_ERR_NUMERICAL;
    case halfrad::ErrorCode::io_error:
      return HR_ERR_IO;
  }
  return HR_ERR_NUMERICAL;
}

template <typename Fn>
hr_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HR_OK;
  } catch (const halfrad::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HR_ERR_NUMERICAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HR_ERR_NUMERICAL;
  }
}

hr_status fail_arg(const char* msg) {
  g_last_error = msg;
  return HR_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

halfrad::AnalysisOptions options_of(const hr_options* opt) {
  halfrad::AnalysisOptions o;
  if (opt) {
    o.tau = opt->tau;
    o.eps = opt->eps;
    o.rank_tol = opt->rank_tol;
    o.grid_size = opt->grid_size;
    o.refine_tol = opt->refine_tol;
    o.boundary_count = opt->boundary_count;
    o.seed = opt->seed;
  }
  return o;
}

}  // namespace

extern "C" {

const char* hr_version(void) { return halfrad::kVersion; }

const char* hr_last_error(void) { return g_last_error.c_str(); }

void hr_options_init(hr_options* opt) {
  if (!opt) return;
  opt->tau = halfrad::kDefaultGapTol;
  opt->eps = halfrad::kDefaultClusterTol;
  opt->rank_tol = halfrad::kDefaultRankTol;
  opt->grid_size = halfrad::kDefaultGridSize;
  opt->refine_tol = halfrad::kDefaultRefineTol;
  opt->boundary_count = halfrad::kDefaultBoundaryCount;
  opt->seed = 0;
}

void hr_string_free(char* s) { delete[] s; }

hr_status hr_matrix_create(int n, const double* entries, hr_matrix** out) {
  if (!out || !entries) return fail_arg("null argument");
  if (n < 1) return fail_arg("matrix dimension must be >= 1");
  return wrap([&] {
    auto m = std::make_unique<hr_matrix>();
    m->entries.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m->entries(i, j) = halfrad::Complex(entries[2 * (i * n + j)],
                                            entries[2 * (i * n + j) + 1]);
    halfrad::require_finite(m->entries);
    *out = m.release();
  });
}

hr_status hr_matrix_parse(const char* text, hr_matrix** out) {
  if (!out || !text) return fail_arg("null argument");
  return wrap([&] {
    halfrad::MatrixFile mf = halfrad::parse_matrix_text(text);
    *out = new hr_matrix{std::move(mf.entries), std::move(mf.metadata)};
  });
}

hr_status hr_matrix_read_file(const char* path, hr_matrix** out) {
  if (!out || !path) return fail_arg("null argument");
  return wrap([&] {
    halfrad::MatrixFile mf = halfrad::read_matrix_file(path);
    *out = new hr_matrix{std::move(mf.entries), std::move(mf.metadata)};
  });
}

hr_status hr_matrix_write_file(const hr_matrix* m, const char* path) {
  if (!m || !path) return fail_arg("null argument");
  return wrap([&] { halfrad::write_matrix_file(path, m->entries, m->metadata); });
}

hr_status hr_matrix_to_json(const hr_matrix* m, char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json = dup_string(halfrad::matrix_to_json(m->entries, m->metadata));
  });
}

hr_status hr_matrix_copy_entries(const hr_matrix* m, double* entries_out) {
  if (!m || !entries_out) return fail_arg("null argument");
  const auto n = m->entries.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      entries_out[2 * (i * n + j)] = m->entries(i, j).real();
      entries_out[2 * (i * n + j) + 1] = m->entries(i, j).imag();
    }
  return HR_OK;
}

hr_status hr_matrix_set_metadata(hr_matrix* m, const char* key,
                                 const char* value) {
  if (!m || !key || !value) return fail_arg("null argument");
  m->metadata[key] = value;
  return HR_OK;
}

int hr_matrix_dim(const hr_matrix* m) {
  return m ? static_cast<int>(m->entries.rows()) : 0;
}

void hr_matrix_free(hr_matrix* m) { delete m; }

hr_status hr_spectral_norm(const hr_matrix* m, double* out) {
  if (!m || !out) return fail_arg("null argument");
  return wrap([&] { *out = halfrad::spectral_norm(m->entries); });
}

hr_status hr_numerical_radius(const hr_matrix* m, const hr_options* opt,
                              double* radius, double* theta_star) {
  if (!m || !radius) return fail_arg("null argument");
  return wrap([&] {
    const auto o = options_of(opt);
    const auto nr =
        halfrad::numerical_radius(m->entries, o.grid_size, o.refine_tol);
    *radius = nr.radius;
    if (theta_star) *theta_star = nr.theta_star;
  });
}

hr_status hr_fov_boundary_csv(const hr_matrix* m, int count, char** out_csv) {
  if (!m || !out_csv) return fail_arg("null argument");
  return wrap([&] {
    *out_csv = dup_string(halfrad::fov_boundary_csv(m->entries, count));
  });
}

hr_status hr_is_half_radial(const hr_matrix* m, const hr_options* opt,
                            int* verdict) {
  if (!m || !verdict) return fail_arg("null argument");
  return wrap([&] {
    const auto o = options_of(opt);
    *verdict = halfrad::is_half_radial(
                   m->entries, o.tau, o.eps,
                   {o.grid_size, o.refine_tol, o.boundary_count})
                   .verdict
                   ? 1
                   : 0;
  });
}

hr_status hr_analyze_json(const hr_matrix* m, const hr_options* opt,
                          int crouzeix_kmax, int with_decomposition,
                          char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json = dup_string(halfrad::analyze_report(m->entries, options_of(opt),
                                                   crouzeix_kmax,
                                                   with_decomposition != 0)
                               .dump(2));
  });
}

hr_status hr_radius_json(const hr_matrix* m, const hr_options* opt,
                         char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json =
        dup_string(halfrad::radius_report(m->entries, options_of(opt)).dump(2));
  });
}

hr_status hr_crouzeix_json(const hr_matrix* m, const hr_options* opt, int k_max,
                           char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json = dup_string(
        halfrad::crouzeix_report(m->entries, options_of(opt), k_max).dump(2));
  });
}

hr_status hr_crabb_json(const hr_matrix* m, const hr_options* opt, int k,
                        char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json = dup_string(
        halfrad::crabb_report(m->entries, options_of(opt), k).dump(2));
  });
}

hr_status hr_certify_decomposition_json(const hr_matrix* m,
                                        const hr_options* opt,
                                        char** out_json) {
  if (!m || !out_json) return fail_arg("null argument");
  return wrap([&] {
    *out_json = dup_string(
        halfrad::certify_decomposition_report(m->entries, options_of(opt))
            .dump(2));
  });
}

hr_status hr_generate_ccc(int n, hr_matrix** out) {
  if (!out) return fail_arg("null argument");
  return wrap([&] {
    auto m = std::make_unique<hr_matrix>();
    m->entries = halfrad::ccc_matrix(n);
    m->metadata["name"] = "ccc_" + std::to_string(n);
    m->metadata["provenance"] = "generate ccc " + std::to_string(n);
    *out = m.release();
  });
}

hr_status hr_generate_half_radial(int n, int mult, double sigma,
                                  double b_radius_frac, uint64_t seed,
                                  hr_matrix** out) {
  if (!out) return fail_arg("null argument");
  return wrap([&] {
    auto m = std::make_unique<hr_matrix>();
    m->entries =
        halfrad::synthesize_half_radial(n, mult, sigma, b_radius_frac, seed);
    std::ostringstream prov;
    prov << "generate halfradial " << n << " " << mult << " " << sigma << " "
         << b_radius_frac << " " << seed;
    m->metadata["name"] = "halfradial_" + std::to_string(n);
    m->metadata["provenance"] = prov.str();
    m->metadata["seed"] = std::to_string(seed);
    *out = m.release();
  });
}

hr_status hr_generate_haar(int n, uint64_t seed, hr_matrix** out) {
  if (!out) return fail_arg("null argument");
  return wrap([&] {
    auto m = std::make_unique<hr_matrix>();
    m->entries = halfrad::haar_unitary(n, seed);
    m->metadata["name"] = "haar_" + std::to_string(n);
    m->metadata["provenance"] =
        "generate haar " + std::to_string(n) + " " + std::to_string(seed);
    m->metadata["seed"] = std::to_string(seed);
    *out = m.release();
  });
}

}  // extern "C"
