#ifndef HALFRAD_ANALYSIS_HPP
#define HALFRAD_ANALYSIS_HPP

#include <cstdint>

#include <nlohmann/json_fwd.hpp>

#include "halfrad/types.hpp"

namespace halfrad {

// Machine-readable reports (schema "halfrad-report/1", ordered keys so
// identical inputs produce byte-identical output). The CLI renders its
// text view from these.

struct AnalysisOptions {
  double tau = kDefaultGapTol;
  double eps = kDefaultClusterTol;
  double rank_tol = kDefaultRankTol;
  int grid_size = kDefaultGridSize;
  double refine_tol = kDefaultRefineTol;
  int boundary_count = kDefaultBoundaryCount;
  std::uint64_t seed = 0;
};

nlohmann::ordered_json analyze_report(const Matrix& a,
                                      const AnalysisOptions& opt,
                                      int crouzeix_kmax = 0,
                                      bool with_decomposition = false);

nlohmann::ordered_json crouzeix_report(const Matrix& a,
                                       const AnalysisOptions& opt, int k_max);

nlohmann::ordered_json crabb_report(const Matrix& a,
                                    const AnalysisOptions& opt, int k);

nlohmann::ordered_json certify_decomposition_report(const Matrix& a,
                                                    const AnalysisOptions& opt);

nlohmann::ordered_json radius_report(const Matrix& a,
                                     const AnalysisOptions& opt);

std::string fov_boundary_csv(const Matrix& a, int count);

}  // namespace halfrad

#endif
