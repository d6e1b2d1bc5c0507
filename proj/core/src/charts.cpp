#include "strata/charts.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace strata {

GrassmannChartPoint::GrassmannChartPoint(int ambient_dim, std::vector<int> pivot_cols,
                                         Mat coeffs)
    : ambient_dim_(ambient_dim), pivot_cols_(std::move(pivot_cols)), coeffs_(std::move(coeffs)) {
  const int kk = static_cast<int>(pivot_cols_.size());
  if (kk < 1 || kk > ambient_dim_)
    throw InvalidRankError("chart needs 1 <= k <= ambient dimension");
  for (int i = 0; i < kk; ++i) {
    if (pivot_cols_[i] < 0 || pivot_cols_[i] >= ambient_dim_)
      throw InvalidRankError("pivot column out of range");
    if (i > 0 && pivot_cols_[i] <= pivot_cols_[i - 1])
      throw InvalidRankError("pivot columns must be strictly increasing");
  }
  if (coeffs_.rows() != kk || coeffs_.cols() != ambient_dim_ - kk)
    throw DimensionMismatchError("chart coefficients must be k x (ambient - k)");
}

Mat GrassmannChartPoint::full_matrix() const {
  const int kk = k();
  Mat full(kk, ambient_dim_);
  int free_idx = 0;
  int pivot_idx = 0;
  for (int c = 0; c < ambient_dim_; ++c) {
    if (pivot_idx < kk && pivot_cols_[pivot_idx] == c) {
      full.col(c) = Vec::Unit(kk, pivot_idx);
      ++pivot_idx;
    } else {
      full.col(c) = coeffs_.col(free_idx);
      ++free_idx;
    }
  }
  return full;
}

GrassmannChartPoint grassmann_from_span(const Mat& span_cols, double tol) {
  const int dim = static_cast<int>(span_cols.rows());
  const int kk = static_cast<int>(span_cols.cols());
  if (kk < 1 || kk > dim)
    throw InvalidRankError("span must have between 1 and ambient-dim vectors");

  Eigen::JacobiSVD<Mat> svd(span_cols, Eigen::ComputeThinU);
  const RVec& sigma = svd.singularValues();
  if (sigma(kk - 1) <= tol * sigma(0))
    throw NotIndependentError("spanning vectors are not linearly independent at tolerance");
  const Mat q = svd.matrixU().leftCols(kk);  // orthonormal basis of the subspace

  // Greedy max-volume pivot rows, ties broken toward the smaller index so
  // that exact echelon data recovers the leftmost (principal) chart. The
  // selection is invariant under a change of spanning set: any two
  // orthonormal bases differ by a right unitary factor, which rescales
  // none of the residual norms below.
  Mat residual = q.adjoint();  // k x dim; column c is row c of q, conjugated
  std::vector<int> pivots;
  std::vector<bool> used(dim, false);
  for (int step = 0; step < kk; ++step) {
    double best = -1.0;
    for (int c = 0; c < dim; ++c)
      if (!used[c]) best = std::max(best, residual.col(c).norm());
    int choice = -1;
    for (int c = 0; c < dim; ++c) {
      if (!used[c] && residual.col(c).norm() >= best * (1.0 - 1e-12)) {
        choice = c;
        break;
      }
    }
    pivots.push_back(choice);
    used[choice] = true;
    const Vec u = residual.col(choice) / residual.col(choice).norm();
    for (int c = 0; c < dim; ++c)
      if (!used[c]) residual.col(c) -= u * u.dot(residual.col(c));
  }
  std::sort(pivots.begin(), pivots.end());

  Mat q_pivot(kk, kk);
  for (int i = 0; i < kk; ++i) q_pivot.row(i) = q.row(pivots[i]);

  // w = q * q_pivot^{-1} has an identity block at the pivot rows; its
  // transpose is the echelon full matrix.
  const Mat w = q_pivot.transpose().partialPivLu().solve(q.transpose()).transpose();

  Mat coeffs(kk, dim - kk);
  int free_idx = 0;
  int pivot_idx = 0;
  for (int r = 0; r < dim; ++r) {
    if (pivot_idx < kk && pivots[pivot_idx] == r) {
      ++pivot_idx;
    } else {
      coeffs.col(free_idx++) = w.row(r).transpose();
    }
  }
  return GrassmannChartPoint(dim, std::move(pivots), std::move(coeffs));
}

ProjectiveMatrixPoint::ProjectiveMatrixPoint(const Mat& b) {
  if (b.rows() != b.cols() || b.rows() < 1)
    throw DimensionMismatchError("projective matrix representative must be square");
  const double norm = b.norm();
  if (norm < 1e-150) throw ZeroMatrixError("zero matrix has no projective class");
  b_ = b / norm;
  b_ = unflatten_rowmajor(phase_canonicalized(flatten_rowmajor(b_)), b.rows(), b.cols());

  Eigen::JacobiSVD<Mat> svd(b_);
  sigma_min_ = svd.singularValues()(b.rows() - 1);
  det_modulus_ = std::abs(b_.partialPivLu().determinant());
}

Mat ProjectiveMatrixPoint::to_affine(double tol) const {
  if (std::abs(b_(0, 0)) < tol)
    throw Error("AffineChartUnavailable",
                "top-left entry vanishes; affine chart a_11 = 1 unavailable");
  return b_ / b_(0, 0);
}

bool is_on_hypersurface(const Mat& b, double tol) {
  if (b.rows() != b.cols() || b.rows() < 1)
    throw DimensionMismatchError("hypersurface test needs a square matrix");
  const double norm = b.norm();
  if (norm < 1e-150) throw ZeroMatrixError("zero matrix has no projective class");
  Eigen::JacobiSVD<Mat> svd(b / norm);
  return svd.singularValues()(b.rows() - 1) < tol;
}

StratumPoint::StratumPoint(GrassmannChartPoint left, ProjectiveMatrixPoint core,
                           GrassmannChartPoint right, double hypersurface_tol)
    : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)) {
  if (left_.k() != core_.k() || right_.k() != core_.k())
    throw DimensionMismatchError("stratum point factors disagree on k");
  if (core_.on_hypersurface(hypersurface_tol))
    throw OnHypersurfaceError("core matrix lies on the determinant hypersurface");
}

int stratum_complex_dimension(int n, int m, int k) {
  if (k < 1 || k > n || n > m)
    throw InvalidRankError("stratum dimension needs 1 <= k <= n <= m");
  return k * (n + m - k) - 1;
}

}  // namespace strata
