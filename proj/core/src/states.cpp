#include "strata/states.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace strata {

namespace {

int rank_above(const RVec& sigma, double rank_tol) {
  if (sigma.size() == 0) return 0;
  const double cutoff = rank_tol * sigma(0);
  int k = 0;
  while (k < sigma.size() && sigma(k) > cutoff) ++k;
  return k;
}

}  // namespace

PureState::PureState(int n, int m, Vec vec, bool swapped)
    : n_(n), m_(m), vec_(std::move(vec)), swapped_(swapped) {
  if (n_ < 1 || m_ < 1)
    throw DimensionMismatchError("factor dimensions must be >= 1");
  if (n_ > m_)
    throw DimensionMismatchError(
        "left factor dimension exceeds right; use PureState::oriented");
  if (vec_.size() != static_cast<Eigen::Index>(n_) * m_)
    throw DimensionMismatchError("state vector length " + std::to_string(vec_.size()) +
                                 " does not equal n*m = " + std::to_string(n_ * m_));
  const double norm = vec_.norm();
  if (norm < 1e-12) throw ZeroStateError("state vector has vanishing norm");
  vec_ /= norm;
}

PureState PureState::oriented(int n, int m, const Vec& vec) {
  if (n <= m) return PureState(n, m, vec);
  if (vec.size() != static_cast<Eigen::Index>(n) * m)
    throw DimensionMismatchError("state vector length does not equal n*m");
  return PureState(m, n, flatten_rowmajor(unflatten_rowmajor(vec, n, m).transpose()),
                   /*swapped=*/true);
}

cxd PureState::inner(const PureState& other) const {
  if (n_ != other.n_ || m_ != other.m_)
    throw DimensionMismatchError("inner product between states of unequal shape");
  return vec_.dot(other.vec_);  // Eigen's dot conjugates the left argument
}

PureState PureState::canonicalized() const {
  return PureState(n_, m_, phase_canonicalized(vec_), swapped_);
}

TensorExpression::TensorExpression(int n, int m, std::vector<std::pair<Vec, Vec>> terms)
    : n_(n), m_(m), terms_(std::move(terms)) {
  if (n_ < 1 || m_ < 1)
    throw DimensionMismatchError("factor dimensions must be >= 1");
  if (terms_.empty()) throw ZeroStateError("expression has no terms");
  for (const auto& [x, y] : terms_) {
    if (x.size() != n_ || y.size() != m_)
      throw DimensionMismatchError("term vector length does not match factor dimensions");
  }
}

TensorExpression TensorExpression::from_matrices(const Mat& left, const Mat& right) {
  if (left.cols() != right.cols())
    throw UnequalLengthError("left and right factor counts differ");
  std::vector<std::pair<Vec, Vec>> terms;
  terms.reserve(left.cols());
  for (Eigen::Index i = 0; i < left.cols(); ++i)
    terms.emplace_back(left.col(i), right.col(i));
  return TensorExpression(static_cast<int>(left.rows()), static_cast<int>(right.rows()),
                          std::move(terms));
}

Mat TensorExpression::left_matrix() const {
  Mat out(n_, term_count());
  for (int i = 0; i < term_count(); ++i) out.col(i) = terms_[i].first;
  return out;
}

Mat TensorExpression::right_matrix() const {
  Mat out(m_, term_count());
  for (int i = 0; i < term_count(); ++i) out.col(i) = terms_[i].second;
  return out;
}

Vec TensorExpression::evaluate() const {
  // sum_i x_i y_i^T, flattened row-major.
  return flatten_rowmajor(left_matrix() * right_matrix().transpose());
}

bool TensorExpression::is_linearly_independent(double rank_tol) const {
  const int k = term_count();
  if (k > n_ || k > m_) return false;
  Eigen::JacobiSVD<Mat> left_svd(left_matrix());
  Eigen::JacobiSVD<Mat> right_svd(right_matrix());
  return rank_above(left_svd.singularValues(), rank_tol) == k &&
         rank_above(right_svd.singularValues(), rank_tol) == k;
}

Vec SchmidtDecomposition::reconstruct() const {
  Mat d = Mat::Zero(left_frame.rows(), right_frame.rows());
  for (int i = 0; i < rank(); ++i)
    d += coefficients(i) * left_frame.col(i) * right_frame.col(i).transpose();
  return flatten_rowmajor(d);
}

PureState SchmidtDecomposition::to_state() const {
  return PureState(static_cast<int>(left_frame.rows()),
                   static_cast<int>(right_frame.rows()), reconstruct());
}

SchmidtDecomposition schmidt_decompose(const PureState& state, double rank_tol) {
  if (!(rank_tol > 0.0)) throw std::invalid_argument("rank_tol must be positive");

  Eigen::JacobiSVD<Mat> svd(state.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVec& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) < 1e-12)
    throw ZeroStateError("state has no singular value above tolerance");

  const int k = rank_above(sigma, rank_tol);

  SchmidtDecomposition out;
  out.coefficients = sigma.head(k);
  out.left_frame = svd.matrixU().leftCols(k);
  // d = sum_i sigma_i u_i v_i^H = sum_i sigma_i u_i conj(v_i)^T, so the
  // right Schmidt vectors are the conjugated right singular vectors.
  out.right_frame = svd.matrixV().leftCols(k).conjugate();

  for (int i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < out.left_frame.rows(); ++j) {
      const double a = std::abs(out.left_frame(j, i));
      if (a > 1e-8) {
        const cxd phase = std::conj(out.left_frame(j, i)) / a;
        out.left_frame.col(i) *= phase;
        out.right_frame.col(i) *= std::conj(phase);
        break;
      }
    }
  }

  for (int i = 0; i + 1 < k; ++i) {
    if (out.coefficients(i) - out.coefficients(i + 1) < kDegenerateGap) {
      out.degenerate = true;
      break;
    }
  }
  return out;
}

int length(const TensorExpression& expr, double rank_tol) {
  const Vec v = expr.evaluate();
  if (v.norm() < 1e-12)
    throw ZeroStateError("expression evaluates to the zero vector");
  Eigen::JacobiSVD<Mat> svd(unflatten_rowmajor(v, expr.left_dim(), expr.right_dim()));
  return rank_above(svd.singularValues(), rank_tol);
}

Mat random_orthonormal_frame(Rng& rng, int rows, int cols) {
  const Mat g = rng.complex_gaussian_matrix(rows, cols);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  const Mat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int i = 0; i < cols; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

PureState sample_state(int n, int m, std::optional<int> k, std::uint64_t seed) {
  if (n < 1 || m < 1 || n > m)
    throw DimensionMismatchError("sample_state requires 1 <= n <= m");
  Rng rng(seed);
  if (!k.has_value()) {
    Vec v(static_cast<Eigen::Index>(n) * m);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_gaussian();
    return PureState(n, m, std::move(v));
  }
  const int kk = *k;
  if (kk < 1 || kk > std::min(n, m))
    throw InvalidRankError("requested Schmidt rank " + std::to_string(kk) +
                           " outside [1, min(n,m)]");
  const Mat a = random_orthonormal_frame(rng, n, kk);
  const Mat b = random_orthonormal_frame(rng, m, kk);
  RVec mu(kk);
  for (int i = 0; i < kk; ++i) mu(i) = rng.uniform(0.35, 1.0);
  mu /= mu.norm();
  std::sort(mu.data(), mu.data() + kk, std::greater<double>());

  Mat d = Mat::Zero(n, m);
  for (int i = 0; i < kk; ++i) d += mu(i) * a.col(i) * b.col(i).transpose();
  return PureState(n, m, flatten_rowmajor(d));
}

}  // namespace strata
