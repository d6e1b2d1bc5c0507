// Shared scalar/matrix aliases, error types and the seeded random stream
// used by every sampling routine in the library.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace strata {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

// Relative rank cutoff sigma_i > tol * sigma_1 shared across the library.
inline constexpr double kDefaultRankTol = 1e-10;
// Adjacent Schmidt coefficients closer than this count as degenerate.
inline constexpr double kDegenerateGap = 1e-8;

// Base class for all recoverable input errors. `kind()` is a stable
// machine-readable tag; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct ZeroStateError : Error {
  explicit ZeroStateError(const std::string& m) : Error("ZeroState", m) {}
};
struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& m) : Error("DimensionMismatch", m) {}
};
struct InvalidRankError : Error {
  explicit InvalidRankError(const std::string& m) : Error("InvalidRank", m) {}
};
struct NotIndependentError : Error {
  explicit NotIndependentError(const std::string& m) : Error("NotIndependent", m) {}
};
struct NotSameStateError : Error {
  explicit NotSameStateError(const std::string& m) : Error("NotSameState", m) {}
};
struct UnequalLengthError : Error {
  explicit UnequalLengthError(const std::string& m) : Error("UnequalLength", m) {}
};
struct ZeroMatrixError : Error {
  explicit ZeroMatrixError(const std::string& m) : Error("ZeroMatrix", m) {}
};
struct OnHypersurfaceError : Error {
  explicit OnHypersurfaceError(const std::string& m) : Error("OnHypersurface", m) {}
};
struct FrameNotOrthonormalError : Error {
  explicit FrameNotOrthonormalError(const std::string& m) : Error("FrameNotOrthonormal", m) {}
};

// Deterministic random stream. Gaussian variates are produced by an
// explicit Box-Muller transform so that a given seed yields the same
// sequence on every standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = 1.0 - uniform();  // (0, 1]: keeps log finite
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * kPi * v);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * v);
  }

  // Standard complex Gaussian, E|z|^2 = 1.
  cxd complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cxd(re, im) / std::sqrt(2.0);
  }

  Mat complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Mat out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = complex_gaussian();
    return out;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Row-major flattening shared by every module: e_j (x) d_s lands at
// index j*m + s (0-based).
inline Vec flatten_rowmajor(const Mat& d) {
  const Eigen::Index n = d.rows(), m = d.cols();
  Vec v(n * m);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index s = 0; s < m; ++s) v(j * m + s) = d(j, s);
  return v;
}

inline Mat unflatten_rowmajor(const Vec& v, Eigen::Index n, Eigen::Index m) {
  Mat d(n, m);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index s = 0; s < m; ++s) d(j, s) = v(j * m + s);
  return d;
}

// Multiplies v by a unit phase so that its first entry of modulus above
// `threshold` becomes real positive. No-op if all entries are below it.
inline Vec phase_canonicalized(Vec v, double threshold = 1e-8) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > threshold) {
      v *= std::conj(v(i)) / a;
      return v;
    }
  }
  return v;
}

}  // namespace strata
