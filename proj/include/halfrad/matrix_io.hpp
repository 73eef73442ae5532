#ifndef HALFRAD_MATRIX_IO_HPP
#define HALFRAD_MATRIX_IO_HPP

#include <map>
#include <string>

#include "halfrad/types.hpp"

namespace halfrad {

// Matrix files: JSON schema "halfrad-matrix/1" with explicit [re, im]
// pairs, or a plain whitespace grid (one matrix row per line, entries as
// re im pairs; '#' starts a comment). JSON round-trips bit-exactly for
// finite doubles.

using Metadata = std::map<std::string, std::string>;

struct MatrixFile {
  Matrix entries;
  Metadata metadata;  // name, seed, provenance, ...
};

MatrixFile parse_matrix_text(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

std::string matrix_to_json(const Matrix& m, const Metadata& metadata = {});
void write_matrix_file(const std::string& path, const Matrix& m,
                       const Metadata& metadata = {});

// FNV-1a over dimensions and raw entry bytes; identifies inputs in reports.
std::string matrix_digest(const Matrix& m);

}  // namespace halfrad

#endif
