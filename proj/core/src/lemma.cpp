#include "strata/lemma.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace strata {

namespace {

double max_col_norm(const Mat& d) {
  double out = 0.0;
  for (Eigen::Index c = 0; c < d.cols(); ++c) out = std::max(out, d.col(c).norm());
  return out;
}

// Invertible completion [cols | orthonormal complement] of a full-rank
// D x k matrix.
Mat complete_to_basis(const Mat& cols) {
  const Eigen::Index dim = cols.rows(), kk = cols.cols();
  if (dim == kk) return cols;
  Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeFullU);
  Mat full(dim, dim);
  full.leftCols(kk) = cols;
  full.rightCols(dim - kk) = svd.matrixU().rightCols(dim - kk);
  return full;
}

}  // namespace

LemmaCertificate recover_change_of_basis(const TensorExpression& expr1,
                                         const TensorExpression& expr2, double tol) {
  if (expr1.left_dim() != expr2.left_dim() || expr1.right_dim() != expr2.right_dim())
    throw DimensionMismatchError("expressions live on different factor dimensions");
  if (expr1.term_count() != expr2.term_count())
    throw UnequalLengthError("expressions have different term counts");
  if (!expr1.is_linearly_independent() || !expr2.is_linearly_independent())
    throw NotIndependentError("both expressions must be linearly independent");

  const Vec v1 = expr1.evaluate();
  const Vec v2 = expr2.evaluate();
  if ((v1 - v2).norm() > tol * std::max(1.0, v1.norm()))
    throw NotSameStateError("expressions do not evaluate to the same vector");

  const int k = expr1.term_count();
  const Mat x = expr1.left_matrix();   // n x k
  const Mat y = expr1.right_matrix();  // m x k
  const Mat w = expr2.left_matrix();
  const Mat z = expr2.right_matrix();

  LemmaCertificate cert;
  cert.tolerance = tol;

  // (z_1..z_k) = (y_1..y_k) C, solved by least squares on the right factors.
  cert.C = y.colPivHouseholderQr().solve(z);
  cert.residual_z = max_col_norm(z - y * cert.C);

  // Cross-check on the left factors against X (C^t)^{-1}.
  Eigen::FullPivLU<Mat> lu(cert.C);
  if (lu.isInvertible()) {
    // (C^{-1} X^t)^t = X (C^t)^{-1}
    cert.residual_w = max_col_norm(w - lu.solve(x.transpose()).transpose());
  } else {
    cert.residual_w = std::numeric_limits<double>::infinity();
  }

  // Coordinates of (w_j), (z_j) in bases extending (x_i), (y_i); the
  // lemma's block identity A^t B = diag(E_k, 0) certifies the pair.
  const Mat x_basis = complete_to_basis(x);  // n x n
  const Mat y_basis = complete_to_basis(y);  // m x m
  const Mat a = x_basis.partialPivLu().solve(w).transpose();  // k x n
  const Mat b = y_basis.partialPivLu().solve(z).transpose();  // k x m
  Mat block = a.transpose() * b;                              // n x m
  block.topLeftCorner(k, k) -= Mat::Identity(k, k);
  cert.block_residual = block.cwiseAbs().maxCoeff();

  cert.certified = cert.residual_z < tol && cert.residual_w < tol &&
                   cert.block_residual < tol;
  return cert;
}

}  // namespace strata
