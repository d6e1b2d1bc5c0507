#include "strata/geometry.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

#include "strata/charts.hpp"
#include "strata/embedding.hpp"

namespace strata {

namespace {

constexpr double kRankCut = 1e-6;      // sigma_r / sigma_1 above this counts
constexpr double kConfidentGap = 1e4;  // sigma_r / sigma_{r+1} for a pass
constexpr double kIllGap = 1e2;

// Affine coordinates of [v] in CP^{dim-1}: divide by the anchor entry and
// drop it. Scale- and phase-invariant, so upstream normalization
// conventions cannot perturb the differentiated map.
RVec affine_coordinates(const Vec& v, Eigen::Index anchor) {
  const Eigen::Index dim = v.size();
  RVec out(2 * (dim - 1));
  const cxd pivot = v(anchor);
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i == anchor) continue;
    const cxd w = v(i) / pivot;
    out(2 * j) = w.real();
    out(2 * j + 1) = w.imag();
    ++j;
  }
  return out;
}

Eigen::Index max_modulus_index(const Vec& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

// Q factor of the thin QR of g with the R diagonal rotated real positive;
// restriction to orthonormal g is the identity, so it retracts perturbed
// frames back onto the Stiefel manifold smoothly.
Mat qr_retract(const Mat& g) {
  const Eigen::Index rows = g.rows(), cols = g.cols();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  const Mat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < cols; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

Mat perturb_complex(const Mat& base, const RVec& params, Eigen::Index offset) {
  Mat out = base;
  Eigen::Index p = offset;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) += cxd(params(p), params(p + 1));
      p += 2;
    }
  return out;
}

}  // namespace

ChartPoint::ChartPoint(int ambient_dim_, int alpha_, Vec z_)
    : ambient_dim(ambient_dim_), alpha(alpha_), z(std::move(z_)) {
  if (ambient_dim < 1) throw DimensionMismatchError("chart needs ambient dimension >= 1");
  if (alpha < 1 || alpha > ambient_dim)
    throw DimensionMismatchError("chart index must lie in [1, N]");
  if (z.size() != ambient_dim - 1)
    throw DimensionMismatchError("chart point needs N-1 affine coordinates");
  if (!z.allFinite()) throw std::invalid_argument("chart coordinates must be finite");
}

MetricTensor metric_tensor(const ChartPoint& pt, MetricMode mode) {
  const Eigen::Index d = pt.z.size();
  const double s = 1.0 + pt.z.squaredNorm();
  const double denom = (mode == MetricMode::verbatim) ? s : s * s;
  MetricTensor out;
  out.mode = mode;
  // h_kj = ((1 + sum|z|^2) delta_kj - z_j conj(z_k)) / denom
  out.h = (s * Mat::Identity(d, d) - pt.z.conjugate() * pt.z.transpose()) / denom;
  return out;
}

long long density_stratum_dimension(long long n, long long r) {
  if (r < 1 || r > n) throw InvalidRankError("density stratum needs 1 <= r <= n");
  return 2 * n * r - r * r - 1;
}

bool DimensionCertificate::ill_conditioned() const {
  return std::find(warnings.begin(), warnings.end(), "IllConditioned") != warnings.end();
}

bool DimensionCertificate::degenerate_coefficients() const {
  return std::find(warnings.begin(), warnings.end(), "DegenerateCoefficients") !=
         warnings.end();
}

DimensionCertificate certify_jacobian_rank(const std::function<RVec(const RVec&)>& map,
                                           int param_count, long long claimed,
                                           double fd_step) {
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be positive");

  DimensionCertificate cert;
  cert.claimed = claimed;

  const RVec base = RVec::Zero(param_count);
  const RVec f0 = map(base);
  const Eigen::Index out_dim = f0.size();

  if (out_dim == 0 || param_count == 0) {
    cert.measured = 0;
    cert.gap_ratio = std::numeric_limits<double>::infinity();
    cert.passed = (claimed == 0);
    return cert;
  }

  RMat jac(out_dim, param_count);
  RVec probe = base;
  for (int p = 0; p < param_count; ++p) {
    probe(p) = fd_step;
    const RVec fwd = map(probe);
    probe(p) = -fd_step;
    const RVec bwd = map(probe);
    probe(p) = 0.0;
    jac.col(p) = (fwd - bwd) / (2.0 * fd_step);
  }

  Eigen::JacobiSVD<RMat> svd(jac);
  cert.singular_values = svd.singularValues();
  const RVec& sigma = cert.singular_values;

  long long r = 0;
  if (sigma.size() > 0 && sigma(0) > 0.0) {
    while (r < sigma.size() && sigma(r) > kRankCut * sigma(0)) ++r;
  }
  cert.measured = r;
  cert.gap_ratio = (r > 0 && r < sigma.size() && sigma(r) > 0.0)
                       ? sigma(r - 1) / sigma(r)
                       : std::numeric_limits<double>::infinity();
  cert.passed = (cert.measured == claimed) && cert.gap_ratio > kConfidentGap;
  if (cert.gap_ratio < kIllGap ||
      (cert.measured == claimed && !(cert.gap_ratio > kConfidentGap))) {
    cert.warnings.push_back("IllConditioned");
  }
  return cert;
}

DimensionCertificate certify_stratum_dimension(int n, int m, int k, std::uint64_t seed,
                                               double fd_step) {
  const long long claimed = 2LL * stratum_complex_dimension(n, m, k);
  Rng rng(seed);

  // Random base point in the principal chart with a well-conditioned core.
  const Mat left0 = rng.complex_gaussian_matrix(k, n - k);
  const Mat right0 = rng.complex_gaussian_matrix(k, m - k);
  Mat core0;
  while (true) {
    core0 = rng.complex_gaussian_matrix(k, k);
    Eigen::JacobiSVD<Mat> svd(core0);
    const RVec& sv = svd.singularValues();
    if (sv(k - 1) > 0.15 * sv(0)) break;
  }
  core0 /= core0.norm();

  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;

  // The anchor entry of the core stays fixed: the remaining k^2 - 1
  // complex entries are the affine chart of CP^{k^2-1} at the base point.
  const Eigen::Index core_anchor = max_modulus_index(flatten_rowmajor(core0));

  const int left_params = 2 * k * (n - k);
  const int core_params = 2 * (k * k - 1);
  const int right_params = 2 * k * (m - k);
  const int param_count = left_params + core_params + right_params;

  auto assemble = [&](const RVec& params) -> Mat {
    const Mat left_coeffs = perturb_complex(left0, params, 0);
    Mat core = core0;
    {
      Eigen::Index p = left_params;
      Eigen::Index flat = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j, ++flat) {
          if (flat == core_anchor) continue;
          core(i, j) += cxd(params(p), params(p + 1));
          p += 2;
        }
    }
    const Mat right_coeffs = perturb_complex(right0, params, left_params + core_params);
    const GrassmannChartPoint left(n, pivots, left_coeffs);
    const GrassmannChartPoint right(m, pivots, right_coeffs);
    return left.full_matrix().transpose() * core * right.full_matrix();
  };

  const Eigen::Index out_anchor = max_modulus_index(flatten_rowmajor(assemble(RVec::Zero(param_count))));
  auto map = [&](const RVec& params) -> RVec {
    return affine_coordinates(flatten_rowmajor(assemble(params)), out_anchor);
  };

  return certify_jacobian_rank(map, param_count, claimed, fd_step);
}

DimensionCertificate certify_orbit_dimension(const OrbitSpec& spec, std::uint64_t seed,
                                             double fd_step) {
  const int n = spec.n(), m = spec.m(), k = spec.k();
  const long long claimed = orbit_real_dimension(n, m, k);

  const OrbitPoint base = sample_orbit_point(spec, seed);

  const int left_params = 2 * n * k;
  const int right_params = 2 * m * k;
  const int param_count = left_params + right_params + (k - 1);

  auto state_vec = [&](const RVec& params) -> Vec {
    const Mat a = qr_retract(perturb_complex(base.left_frame(), params, 0));
    const Mat b = qr_retract(perturb_complex(base.right_frame(), params, left_params));
    Mat d = Mat::Zero(n, m);
    for (int i = 0; i < k; ++i) {
      const double theta =
          (i == 0) ? 0.0
                   : base.phases()(i - 1) + params(left_params + right_params + i - 1);
      d += spec.mu()(i) * std::polar(1.0, theta) * a.col(i) * b.col(i).transpose();
    }
    return flatten_rowmajor(d);
  };

  DimensionCertificate cert;
  if (static_cast<Eigen::Index>(n) * m == 1) {
    // Single ray: the projective output space is a point.
    cert.claimed = claimed;
    cert.measured = 0;
    cert.gap_ratio = std::numeric_limits<double>::infinity();
    cert.passed = (claimed == 0);
  } else {
    const Eigen::Index anchor = max_modulus_index(state_vec(RVec::Zero(param_count)));
    auto map = [&](const RVec& params) -> RVec {
      return affine_coordinates(state_vec(params), anchor);
    };
    cert = certify_jacobian_rank(map, param_count, claimed, fd_step);
  }

  if (spec.degenerate()) {
    // Repeated coefficients collapse frame directions; the formula claim
    // is not asserted for them.
    cert.passed = false;
    cert.warnings.push_back("DegenerateCoefficients");
  }
  return cert;
}

}  // namespace strata
