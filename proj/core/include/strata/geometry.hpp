// Hermitian metric on the projective space of pure states, closed-form
// dimension formulas, and numerical certification of the manifold
// dimension claims by finite-difference Jacobian rank.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strata/orbits.hpp"
#include "strata/types.hpp"

namespace strata {

inline constexpr double kDefaultFdStep = 1e-5;

// Affine coordinates on the alpha-th chart of CP^{N-1}: the N-1 complex
// coordinates z_l, l != alpha.
struct ChartPoint {
  int ambient_dim = 0;  // N
  int alpha = 1;        // chart index, 1-based
  Vec z;                // length N-1

  ChartPoint(int ambient_dim_, int alpha_, Vec z_);
};

// The verbatim mode divides by (1 + sum |z|^2); the standard
// Fubini-Study form squares that denominator. Both are shipped.
enum class MetricMode { verbatim, fubini_study };

struct MetricTensor {
  Mat h;  // (N-1) x (N-1), Hermitian positive definite
  MetricMode mode = MetricMode::verbatim;
};

MetricTensor metric_tensor(const ChartPoint& pt, MetricMode mode);

// Real dimension 2nr - r^2 - 1 of the rank-r stratum of density matrices.
long long density_stratum_dimension(long long n, long long r);

// Outcome of a numerical dimension check. `passed` holds exactly when the
// measured rank equals the claim with a confident spectral gap; anything
// ambiguous lands in `warnings` instead of silently passing.
struct DimensionCertificate {
  long long claimed = 0;
  long long measured = 0;
  RVec singular_values;
  double gap_ratio = 0.0;  // sigma_r / sigma_{r+1}, +inf when no tail exists
  bool passed = false;
  std::vector<std::string> warnings;

  bool ill_conditioned() const;
  bool degenerate_coefficients() const;
};

// Rank of the real Jacobian J at x0 of a map R^P -> R^Q, by central
// differences, compared against `claimed`.
DimensionCertificate certify_jacobian_rank(
    const std::function<RVec(const RVec&)>& map, int param_count, long long claimed,
    double fd_step = kDefaultFdStep);

// Certifies the rank-k stratum's real dimension 2k(n+m-k) - 2 by
// differentiating chart coords -> embedded affine coords at a random
// base point.
DimensionCertificate certify_stratum_dimension(int n, int m, int k, std::uint64_t seed,
                                               double fd_step = kDefaultFdStep);

// Certifies the orbit dimension 2k(m+n-k) - k - 1 by differentiating
// (frame entries, phases) -> state affine coords through a QR retraction.
// A degenerate spec yields a measured rank plus a DegenerateCoefficients
// warning and no formula verdict.
DimensionCertificate certify_orbit_dimension(const OrbitSpec& spec, std::uint64_t seed,
                                             double fd_step = kDefaultFdStep);

}  // namespace strata
