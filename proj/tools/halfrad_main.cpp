// Command-line front end for the halfrad shared library. Talks to the core
// exclusively through the C API in halfrad.h; text output is rendered from
// the library's JSON reports so both views always agree.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "halfrad.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitNumerical = 3;

int exit_code_of(hr_status s) {
  switch (s) {
    case HR_OK:
      return kExitOk;
    case HR_ERR_DEGENERATE_INPUT:
      return kExitDegenerate;
    case HR_ERR_NUMERICAL:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

struct MatrixHandle {
  hr_matrix* ptr = nullptr;
  ~MatrixHandle() { hr_matrix_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { hr_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail(hr_status s) {
  std::cerr << "error: " << hr_last_error() << "\n";
  return exit_code_of(s);
}

int load_matrix(const std::string& input, MatrixHandle& m) {
  hr_status s;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    s = hr_matrix_parse(buf.str().c_str(), &m.ptr);
  } else {
    s = hr_matrix_read_file(input.c_str(), &m.ptr);
  }
  return s == HR_OK ? kExitOk : fail(s);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string num(const json& v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
  return buf;
}

// --- text renderers -------------------------------------------------------

void render_half_radial(std::ostream& os, const json& hr) {
  os << "half-radial:     " << (hr["verdict"].get<bool>() ? "YES" : "no")
     << "  (gap " << num(hr["gap"]) << ", tau " << num(hr["tau"]);
  if (hr["borderline"].get<bool>()) os << ", borderline";
  os << ")\n";
  os << "diagnostics:\n";
  for (const auto& [name, check] : hr["diagnostics"].items())
    os << "  " << (check["pass"].get<bool>() ? "[pass]" : "[FAIL]") << " "
       << name << "  (residual " << num(check["residual"]) << ")\n";
}

void render_decomposition(std::ostream& os, const json& d) {
  if (!d["certified"].get<bool>()) {
    os << "decomposition:   refused (" << d["reason"].get<std::string>()
       << ")\n";
    return;
  }
  os << "decomposition:   m = " << d["m"] << ", sigma = " << num(d["sigma"])
     << ", B is " << d["B_size"] << "x" << d["B_size"]
     << ", ||B|| = " << num(d["B_norm"]) << ", r(B) = " << num(d["B_radius"])
     << ", residual = " << num(d["residual"]) << "\n";
}

void render_crouzeix_rows(std::ostream& os, const json& rows) {
  os << "  k   ||A^k||          r(A)^k           ratio       extremal\n";
  for (const auto& row : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-3d %-16.10g %-16.10g %-11.8g %s\n",
                  row["k"].get<int>(), row["norm_power"].get<double>(),
                  row["radius_pow_k"].get<double>(),
                  row["ratio"].get<double>(),
                  row["extremal"].get<bool>() ? "yes" : "no");
    os << line;
    if (row.contains("crabb")) {
      const auto& c = row["crabb"];
      os << "      crabb: B is " << c["B_size"] << "x" << c["B_size"]
         << ", r(B) = " << num(c["b_radius"])
         << ", ||B^k|| = " << num(c["b_power_norm"])
         << ", residual = " << num(c["residual"]) << "\n";
    }
  }
}

std::string render_analyze(const json& doc) {
  std::ostringstream os;
  os << "matrix:          n = " << doc["input"]["n"] << "  ("
     << doc["input"]["digest"].get<std::string>() << ")\n";
  os << "norm:            " << num(doc["norm"]["value"]) << "\n";
  os << "radius:          " << num(doc["radius"]["value"]) << "  (theta* = "
     << num(doc["radius"]["theta_star"]) << ")\n";
  render_half_radial(os, doc["half_radial"]);
  if (doc.contains("decomposition")) render_decomposition(os, doc["decomposition"]);
  if (doc.contains("crouzeix")) {
    os << "crouzeix ratios:\n";
    render_crouzeix_rows(os, doc["crouzeix"]);
  }
  return os.str();
}

std::string render_radius(const json& doc) {
  std::ostringstream os;
  os << "norm:   " << num(doc["norm"]["value"]) << "\n";
  os << "radius: " << num(doc["radius"]["value"]) << "  (theta* = "
     << num(doc["radius"]["theta_star"]) << ")\n";
  os << "bounds: [" << num(doc["bounds"]["lower_half_norm"]) << ", "
     << num(doc["bounds"]["upper_norm"]) << "]\n";
  return os.str();
}

std::string render_crouzeix(const json& doc) {
  std::ostringstream os;
  os << "matrix: n = " << doc["input"]["n"] << "\n";
  render_crouzeix_rows(os, doc["ratios"]);
  return os.str();
}

std::string render_crabb(const json& doc) {
  std::ostringstream os;
  os << "k = " << doc["k"] << ", r(A) = " << num(doc["radius"]["value"])
     << "\n";
  os << "norm profile:";
  for (const auto& v : doc["norm_profile"]) os << " " << num(v);
  os << "\northogonality residual: " << num(doc["orthogonality_residual"])
     << "\n";
  const auto& c = doc["decomposition"];
  os << "decomposition: B is " << c["B_size"] << "x" << c["B_size"]
     << ", r(B) = " << num(c["b_radius"])
     << ", ||B^k|| = " << num(c["b_power_norm"])
     << ", residual = " << num(c["residual"]) << "\n";
  return os.str();
}

std::string render_certify(const json& doc) {
  std::ostringstream os;
  os << "matrix:        n = " << doc["input"]["n"] << "\n";
  render_decomposition(os, doc["decomposition"]);
  if (doc.contains("half_radial")) render_half_radial(os, doc["half_radial"]);
  return os.str();
}

struct CommonArgs {
  std::string input = "-";
  std::string out;
  std::string format = "text";
  hr_options opts;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", a.input,
                    "matrix file (JSON or re/im grid); '-' reads stdin");
  cmd->add_option("--out", a.out, "write output to this path instead of stdout");
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tau", a.opts.tau, "half-radiality gap tolerance");
  cmd->add_option("--eps", a.opts.eps, "singular value cluster tolerance");
  cmd->add_option("--rank-tol", a.opts.rank_tol, "rank cutoff tolerance");
  cmd->add_option("--grid", a.opts.grid_size, "theta grid size (>= 64)");
  cmd->add_option("--refine-tol", a.opts.refine_tol,
                  "golden-section theta-width target");
  cmd->add_option("--boundary-count", a.opts.boundary_count,
                  "boundary sample count (>= 8)");
  cmd->add_option("--seed", a.opts.seed, "seed for randomized routines");
}

template <typename Render>
int run_json_command(const CommonArgs& args, hr_status status,
                     const OwnedString& payload, Render render) {
  if (status != HR_OK) return fail(status);
  if (args.format == "json") return emit(payload.str() + "\n", args.out);
  return emit(render(json::parse(payload.str())), args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"field-of-values, numerical radius and half-radiality toolkit"};
  app.require_subcommand(1);

  CommonArgs analyze_args, radius_args, fov_args, crz_args, crabb_args,
      cert_args;
  hr_options_init(&analyze_args.opts);
  hr_options_init(&radius_args.opts);
  hr_options_init(&fov_args.opts);
  hr_options_init(&crz_args.opts);
  hr_options_init(&crabb_args.opts);
  hr_options_init(&cert_args.opts);

  auto* analyze = app.add_subcommand(
      "analyze", "norm, radius, half-radiality certificate and diagnostics");
  add_common(analyze, analyze_args);
  int analyze_kmax = 0;
  bool analyze_decompose = false;
  analyze->add_option("--kmax", analyze_kmax,
                      "also report Crouzeix monomial ratios up to this degree");
  analyze->add_flag("--decompose", analyze_decompose,
                    "append the canonical block decomposition when certified");

  auto* radius = app.add_subcommand("radius", "numerical radius only");
  add_common(radius, radius_args);

  auto* fov = app.add_subcommand(
      "fov", "boundary sweep of W(A), CSV columns theta,support,re,im");
  add_common(fov, fov_args);
  int fov_count = 1024;
  fov->add_option("--count", fov_count, "number of boundary samples (>= 8)");

  auto* crz = app.add_subcommand(
      "crouzeix", "Crouzeix monomial ratio table with extremality verdicts");
  add_common(crz, crz_args);
  int crz_kmax = 4;
  crz->add_option("--kmax", crz_kmax, "largest monomial degree");

  auto* crabb = app.add_subcommand(
      "crabb", "Crabb vector chain and the r(A)(C_k + B) decomposition");
  add_common(crabb, crabb_args);
  int crabb_k = 1;
  crabb->add_option("--k", crabb_k, "monomial degree attaining ratio 2")
      ->required();

  auto* cert = app.add_subcommand(
      "certify-decomposition",
      "canonical (||A|| I_m x J) + B decomposition with residual checks");
  add_common(cert, cert_args);

  auto* gen = app.add_subcommand("generate", "write example matrices");
  gen->require_subcommand(1);
  std::string gen_out;
  auto* gen_ccc = gen->add_subcommand("ccc", "Crabb-Choi-Crouzeix matrix C_n");
  int ccc_n = 1;
  gen_ccc->add_option("n", ccc_n, "C_n is (n+1) x (n+1)")->required();
  gen_ccc->add_option("--out", gen_out, "output file (default stdout)");
  auto* gen_hr =
      gen->add_subcommand("halfradial", "random certified half-radial matrix");
  int hr_n = 0, hr_m = 0;
  double hr_sigma = 1.0, hr_frac = 0.5;
  std::uint64_t hr_seed = 0;
  gen_hr->add_option("n", hr_n, "dimension")->required();
  gen_hr->add_option("m", hr_m, "multiplicity of sigma_max (<= n/2)")->required();
  gen_hr->add_option("sigma", hr_sigma, "norm of the result")->required();
  gen_hr->add_option("frac", hr_frac, "r(B) as a fraction of sigma/2, in [0,1)")
      ->required();
  gen_hr->add_option("seed", hr_seed, "random seed")->required();
  gen_hr->add_option("--out", gen_out, "output file (default stdout)");
  auto* gen_haar = gen->add_subcommand("haar", "Haar-random unitary matrix");
  int haar_n = 0;
  std::uint64_t haar_seed = 0;
  gen_haar->add_option("n", haar_n, "dimension")->required();
  gen_haar->add_option("seed", haar_seed, "random seed")->required();
  gen_haar->add_option("--out", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(analyze_args.input, m)) return rc;
    OwnedString out;
    const hr_status s =
        hr_analyze_json(m.ptr, &analyze_args.opts, analyze_kmax,
                        analyze_decompose ? 1 : 0, &out.ptr);
    return run_json_command(analyze_args, s, out, render_analyze);
  }
  if (radius->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(radius_args.input, m)) return rc;
    OwnedString out;
    const hr_status s = hr_radius_json(m.ptr, &radius_args.opts, &out.ptr);
    return run_json_command(radius_args, s, out, render_radius);
  }
  if (fov->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(fov_args.input, m)) return rc;
    OwnedString csv;
    const hr_status s = hr_fov_boundary_csv(m.ptr, fov_count, &csv.ptr);
    if (s != HR_OK) return fail(s);
    return emit(csv.str(), fov_args.out);
  }
  if (crz->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(crz_args.input, m)) return rc;
    OwnedString out;
    const hr_status s =
        hr_crouzeix_json(m.ptr, &crz_args.opts, crz_kmax, &out.ptr);
    return run_json_command(crz_args, s, out, render_crouzeix);
  }
  if (crabb->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(crabb_args.input, m)) return rc;
    OwnedString out;
    const hr_status s = hr_crabb_json(m.ptr, &crabb_args.opts, crabb_k, &out.ptr);
    return run_json_command(crabb_args, s, out, render_crabb);
  }
  if (cert->parsed()) {
    MatrixHandle m;
    if (int rc = load_matrix(cert_args.input, m)) return rc;
    OwnedString out;
    const hr_status s =
        hr_certify_decomposition_json(m.ptr, &cert_args.opts, &out.ptr);
    return run_json_command(cert_args, s, out, render_certify);
  }
  if (gen->parsed()) {
    MatrixHandle m;
    hr_status s = HR_ERR_INVALID_ARGUMENT;
    if (gen_ccc->parsed()) s = hr_generate_ccc(ccc_n, &m.ptr);
    if (gen_hr->parsed())
      s = hr_generate_half_radial(hr_n, hr_m, hr_sigma, hr_frac, hr_seed,
                                  &m.ptr);
    if (gen_haar->parsed()) s = hr_generate_haar(haar_n, haar_seed, &m.ptr);
    if (s != HR_OK) return fail(s);
    if (!gen_out.empty()) {
      const hr_status w = hr_matrix_write_file(m.ptr, gen_out.c_str());
      return w == HR_OK ? kExitOk : fail(w);
    }
    OwnedString text;
    const hr_status w = hr_matrix_to_json(m.ptr, &text.ptr);
    if (w != HR_OK) return fail(w);
    std::cout << text.str();
    return kExitOk;
  }
  return kExitUsage;
}
