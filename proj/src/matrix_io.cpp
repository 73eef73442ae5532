#include "halfrad/matrix_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace halfrad {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorCode::parse_error, msg);
}

MatrixFile parse_json_matrix(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top-level JSON value must be an object");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    parse_fail("missing \"entries\" array");
  const auto& rows = doc["entries"];
  const std::size_t n = rows.size();
  if (n == 0) parse_fail("matrix must have at least one row");
  if (doc.contains("n") && doc["n"].get<std::size_t>() != n)
    parse_fail("\"n\" does not match the number of rows");

  MatrixFile mf;
  mf.entries.resize(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      std::ostringstream os;
      os << "row " << i + 1 << " must hold exactly " << n << " [re, im] pairs";
      parse_fail(os.str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = rows[i][j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        std::ostringstream os;
        os << "entry (" << i + 1 << ", " << j + 1 << ") must be a [re, im] pair";
        parse_fail(os.str());
      }
      const double re = cell[0].get<double>();
      const double im = cell[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        std::ostringstream os;
        os << "entry (" << i + 1 << ", " << j + 1 << ") is not finite";
        parse_fail(os.str());
      }
      mf.entries(i, j) = Complex(re, im);
    }
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) parse_fail("\"metadata\" must be an object");
    for (const auto& [key, value] : doc["metadata"].items())
      mf.metadata[key] = value.is_string() ? value.get<std::string>()
                                           : value.dump();
  }
  return mf;
}

MatrixFile parse_grid_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof()) {
      std::ostringstream os;
      os << "line " << lineno << ": expected whitespace-separated numbers";
      parse_fail(os.str());
    }
    if (vals.empty()) continue;
    if (vals.size() % 2 != 0) {
      std::ostringstream os;
      os << "line " << lineno << ": odd number of values; entries are re im pairs";
      parse_fail(os.str());
    }
    for (double x : vals)
      if (!std::isfinite(x)) {
        std::ostringstream os;
        os << "line " << lineno << ": non-finite entry";
        parse_fail(os.str());
      }
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) parse_fail("no matrix rows found (line 1: empty input)");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != 2 * n) {
      std::ostringstream os;
      os << "matrix is not square: expected " << n << " rows of " << n
         << " re im pairs, row " << i + 1 << " has " << rows[i].size() / 2;
      parse_fail(os.str());
    }
  MatrixFile mf;
  mf.entries.resize(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mf.entries(i, j) = Complex(rows[i][2 * j], rows[i][2 * j + 1]);
  return mf;
}

}  // namespace

MatrixFile parse_matrix_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    parse_fail("empty input (line 1)");
  MatrixFile mf = (text[first] == '{') ? parse_json_matrix(text)
                                       : parse_grid_matrix(text);
  require_finite(mf.entries);
  return mf;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_text(buf.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error)
      throw Error(ErrorCode::parse_error, path + ": " + e.what());
    throw;
  }
}

std::string matrix_to_json(const Matrix& m, const Metadata& metadata) {
  require_square(m);
  require_finite(m);
  const Eigen::Index n = m.rows();
  // Hand-rolled layout: one matrix row per line. Numbers go through the
  // JSON serializer so they round-trip bit-exactly.
  std::ostringstream os;
  os << "{\n  \"schema\": \"halfrad-matrix/1\",\n  \"n\": " << n
     << ",\n  \"entries\": [\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    os << "    [";
    for (Eigen::Index j = 0; j < n; ++j) {
      os << (j ? ", [" : "[") << ordered_json(m(i, j).real()).dump() << ", "
         << ordered_json(m(i, j).imag()).dump() << "]";
    }
    os << (i + 1 < n ? "],\n" : "]\n");
  }
  os << "  ]";
  if (!metadata.empty()) {
    os << ",\n  \"metadata\": {";
    bool first = true;
    for (const auto& [key, value] : metadata) {
      os << (first ? "\n    " : ",\n    ") << ordered_json(key).dump() << ": "
         << ordered_json(value).dump();
      first = false;
    }
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

void write_matrix_file(const std::string& path, const Matrix& m,
                       const Metadata& metadata) {
  const std::string text = matrix_to_json(m, metadata);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  out << text;
  if (!out)
    throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

std::string matrix_digest(const Matrix& m) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&hash](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      hash ^= bytes[i];
      hash *= 1099511628211ULL;
    }
  };
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  mix(dims, sizeof(dims));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double parts[2] = {m(i, j).real(), m(i, j).imag()};
      mix(parts, sizeof(parts));
    }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << hash;
  return os.str();
}

}  // namespace halfrad
