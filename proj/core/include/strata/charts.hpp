// Chart coordinates for the three factors of the rank-k stratum:
// echelon charts on the Grassmannians G(n,k) and G(m,k), and unit-norm
// matrix representatives of CP^{k^2-1} minus the determinant hypersurface.

#pragma once

#include <vector>

#include "strata/types.hpp"

namespace strata {

inline constexpr double kHypersurfaceTol = 1e-10;

// A k-dimensional subspace of C^D in echelon form: the k x D full matrix
// carries an identity block at `pivot_cols` and the free coefficients
// elsewhere; its rows span the subspace. Pivot columns are 0-based and
// strictly increasing.
class GrassmannChartPoint {
 public:
  GrassmannChartPoint(int ambient_dim, std::vector<int> pivot_cols, Mat coeffs);

  int ambient_dim() const { return ambient_dim_; }
  int k() const { return static_cast<int>(pivot_cols_.size()); }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  const Mat& coeffs() const { return coeffs_; }  // k x (ambient - k)

  // k x ambient matrix: identity at pivot columns, coeffs at the rest.
  Mat full_matrix() const;

 private:
  int ambient_dim_;
  std::vector<int> pivot_cols_;
  Mat coeffs_;
};

// Canonical chart of the subspace spanned by the columns of `span_cols`
// (D x k). Pivots come from a column-pivoted orthogonal factorization
// (greedy max-volume), so the output depends only on the subspace.
GrassmannChartPoint grassmann_from_span(const Mat& span_cols,
                                        double tol = kDefaultRankTol);

// Representative of a point of CP^{k^2-1} as a k x k matrix with unit
// Frobenius norm, the first entry of modulus > 1e-8 (row-major scan)
// rotated real positive.
class ProjectiveMatrixPoint {
 public:
  // Canonicalizes any nonzero matrix; ZeroMatrix otherwise.
  explicit ProjectiveMatrixPoint(const Mat& b);

  int k() const { return static_cast<int>(b_.rows()); }
  const Mat& representative() const { return b_; }
  double det_modulus() const { return det_modulus_; }
  double smallest_singular_value() const { return sigma_min_; }

  bool on_hypersurface(double tol = kHypersurfaceTol) const { return sigma_min_ < tol; }

  // The affine representative with top-left entry 1 (the chart used for
  // the expanded coordinate polynomials); errors when b_11 is numerically 0.
  Mat to_affine(double tol = 1e-10) const;

 private:
  Mat b_;
  double det_modulus_;
  double sigma_min_;
};

// True iff the smallest singular value of B/||B||_F is below tol.
bool is_on_hypersurface(const Mat& b, double tol = kHypersurfaceTol);

// Point of G(n,k) x (CP^{k^2-1} \ hypersurface) x G(m,k). Construction
// rejects a degenerate core.
class StratumPoint {
 public:
  StratumPoint(GrassmannChartPoint left, ProjectiveMatrixPoint core,
               GrassmannChartPoint right, double hypersurface_tol = kHypersurfaceTol);

  const GrassmannChartPoint& left() const { return left_; }
  const ProjectiveMatrixPoint& core() const { return core_; }
  const GrassmannChartPoint& right() const { return right_; }

  int n() const { return left_.ambient_dim(); }
  int m() const { return right_.ambient_dim(); }
  int k() const { return core_.k(); }

 private:
  GrassmannChartPoint left_;
  ProjectiveMatrixPoint core_;
  GrassmannChartPoint right_;
};

// Complex dimension k(n-k) + (k^2-1) + k(m-k) = k(n+m-k) - 1 of the
// rank-k stratum's product manifold.
int stratum_complex_dimension(int n, int m, int k);

}  // namespace strata
