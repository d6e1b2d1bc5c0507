#include "strata/orbits.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace strata {

OrbitSpec::OrbitSpec(int n, int m, RVec mu) : n_(n), m_(m), mu_(std::move(mu)) {
  const int k = static_cast<int>(mu_.size());
  if (k < 1 || k > n_ || n_ > m_)
    throw InvalidRankError("orbit spec needs 1 <= k <= n <= m");
  for (int i = 0; i < k; ++i) {
    if (!(mu_(i) > 0.0))
      throw std::invalid_argument("Schmidt coefficients must be positive");
    if (i > 0 && mu_(i) > mu_(i - 1) + 1e-12)
      throw std::invalid_argument("Schmidt coefficients must be descending");
  }
  if (std::abs(mu_.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("Schmidt coefficients must have unit square-sum");
  degenerate_ = false;
  for (int i = 0; i + 1 < k; ++i) {
    if (mu_(i) - mu_(i + 1) < kDegenerateGap) {
      degenerate_ = true;
      break;
    }
  }
}

OrbitSpec OrbitSpec::normalized(int n, int m, RVec mu, double* adjustment) {
  const double norm = mu.norm();
  if (norm < 1e-12) throw ZeroStateError("coefficient vector has vanishing norm");
  if (adjustment != nullptr) *adjustment = std::abs(1.0 - norm * norm);
  return OrbitSpec(n, m, mu / norm);
}

OrbitPoint::OrbitPoint(OrbitSpec spec, Mat left_frame, Mat right_frame, RVec phases,
                       double frame_tol)
    : spec_(std::move(spec)),
      left_frame_(std::move(left_frame)),
      right_frame_(std::move(right_frame)),
      phases_(std::move(phases)) {
  const int k = spec_.k();
  if (left_frame_.rows() != spec_.n() || left_frame_.cols() != k ||
      right_frame_.rows() != spec_.m() || right_frame_.cols() != k)
    throw DimensionMismatchError("frame shapes do not match the orbit spec");
  if (phases_.size() != k - 1)
    throw DimensionMismatchError("expected k-1 relative phases");
  const double left_dev =
      (left_frame_.adjoint() * left_frame_ - Mat::Identity(k, k)).cwiseAbs().maxCoeff();
  const double right_dev =
      (right_frame_.adjoint() * right_frame_ - Mat::Identity(k, k)).cwiseAbs().maxCoeff();
  if (left_dev > frame_tol || right_dev > frame_tol)
    throw FrameNotOrthonormalError("frame columns are not orthonormal at tolerance");
}

PureState OrbitPoint::to_state() const {
  const int k = spec_.k();
  Mat d = Mat::Zero(spec_.n(), spec_.m());
  for (int i = 0; i < k; ++i) {
    const double theta = (i == 0) ? 0.0 : phases_(i - 1);
    d += spec_.mu()(i) * std::polar(1.0, theta) * left_frame_.col(i) *
         right_frame_.col(i).transpose();
  }
  return PureState(spec_.n(), spec_.m(), flatten_rowmajor(d));
}

PureState orbit_point_to_state(const OrbitPoint& pt) { return pt.to_state(); }

bool same_orbit(const PureState& s1, const PureState& s2, double tol) {
  if (s1.left_dim() != s2.left_dim() || s1.right_dim() != s2.right_dim())
    throw DimensionMismatchError("states live on different factor dimensions");
  Eigen::JacobiSVD<Mat> svd1(s1.matrix());
  Eigen::JacobiSVD<Mat> svd2(s2.matrix());
  return ((svd1.singularValues() - svd2.singularValues()).cwiseAbs().maxCoeff()) <= tol;
}

long long orbit_real_dimension(long long n, long long m, long long k) {
  return 2 * k * (m + n - k) - k - 1;
}

OrbitPoint sample_orbit_point(const OrbitSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  Mat a = random_orthonormal_frame(rng, spec.n(), spec.k());
  Mat b = random_orthonormal_frame(rng, spec.m(), spec.k());
  RVec beta(spec.k() - 1);
  for (Eigen::Index i = 0; i < beta.size(); ++i) beta(i) = rng.uniform(0.0, 2.0 * kPi);
  return OrbitPoint(spec, std::move(a), std::move(b), std::move(beta));
}

}  // namespace strata
