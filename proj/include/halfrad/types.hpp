#ifndef HALFRAD_TYPES_HPP
#define HALFRAD_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace halfrad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr const char* kVersion = "0.1.0";

// Tolerance defaults. Every routine that uses one reports it back in its
// result so downstream consumers know what a number means.
inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultGapTol = 1e-8;
inline constexpr int kDefaultGridSize = 512;
inline constexpr double kDefaultRefineTol = 1e-12;
inline constexpr int kDefaultBoundaryCount = 1024;

enum class ErrorCode {
  invalid_argument,
  parse_error,
  degenerate_input,   // zero matrix or n < 2 where the theory assumes otherwise
  precondition_failed,
  numerical_failure,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Inner product <z,w> = w^* z: linear in the first argument,
// conjugate-linear in the second. Fixed convention project-wide.
inline Complex inner(const Vector& z, const Vector& w) { return w.dot(z); }

// <Az,z> = z^* A z for unit z is the Rayleigh quotient whose modulus the
// numerical radius maximizes.
inline Complex rayleigh(const Matrix& a, const Vector& z) {
  return z.dot(a * z);
}

// Evaluate p(z) with coeffs[i] the coefficient of z^i.
inline Complex poly_eval(std::span<const Complex> coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void require_square(const Matrix& a);
void require_finite(const Matrix& a);
// The characterizations assume a nonzero matrix and n >= 2.
void require_nonzero_n2(const Matrix& a, const char* where);

}  // namespace halfrad

#endif
