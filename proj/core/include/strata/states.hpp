// Bipartite pure states, tensor-sum expressions and the Schmidt
// decomposition. The coefficient matrix of a state on C^n (x) C^m is its
// n x m row-major reshaping; its singular values are the Schmidt
// coefficients and their count above tolerance is the Schmidt rank.

#pragma once

#include <optional>
#include <vector>

#include "strata/types.hpp"

namespace strata {

// Normalized vector in C^n (x) C^m with the factor dimensions attached.
// Convention n <= m; `oriented` swaps the factors when needed and records
// the swap so callers can map frames back.
class PureState {
 public:
  PureState(int n, int m, Vec vec, bool swapped = false);

  // Builds a state from possibly swapped factor dimensions: if n > m the
  // coefficient matrix is transposed and the flag set.
  static PureState oriented(int n, int m, const Vec& vec);

  int left_dim() const { return n_; }
  int right_dim() const { return m_; }
  bool swapped() const { return swapped_; }
  const Vec& vec() const { return vec_; }

  // n x m coefficient matrix, row-major convention.
  Mat matrix() const { return unflatten_rowmajor(vec_, n_, m_); }

  cxd inner(const PureState& other) const;
  double fidelity(const PureState& other) const { return std::abs(inner(other)); }

  // Same ray, global phase fixed (first entry of modulus > 1e-8 made
  // real positive).
  PureState canonicalized() const;

 private:
  int n_, m_;
  Vec vec_;
  bool swapped_;
};

// Ordered tensor-sum expression x = sum_i x_i (x) y_i.
class TensorExpression {
 public:
  TensorExpression(int n, int m, std::vector<std::pair<Vec, Vec>> terms);

  // Columns are the left (resp. right) term vectors.
  static TensorExpression from_matrices(const Mat& left, const Mat& right);

  int left_dim() const { return n_; }
  int right_dim() const { return m_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::pair<Vec, Vec>>& terms() const { return terms_; }

  Mat left_matrix() const;   // n x k
  Mat right_matrix() const;  // m x k

  Vec evaluate() const;  // length n*m

  // True iff both {x_i} and {y_i} have full column rank at the tolerance.
  bool is_linearly_independent(double rank_tol = kDefaultRankTol) const;

 private:
  int n_, m_;
  std::vector<std::pair<Vec, Vec>> terms_;
};

// Result of schmidt_decompose: descending positive coefficients and
// orthonormal frames, x = sum_i mu_i a_i (x) b_i.
struct SchmidtDecomposition {
  RVec coefficients;  // k, descending, > 0
  Mat left_frame;     // n x k, orthonormal columns a_i
  Mat right_frame;    // m x k, orthonormal columns b_i
  bool degenerate = false;  // some |mu_i - mu_{i+1}| < 1e-8

  int rank() const { return static_cast<int>(coefficients.size()); }
  Vec reconstruct() const;  // sum_i mu_i a_i (x) b_i
  PureState to_state() const;
};

// Schmidt decomposition with relative rank cutoff sigma_i > rank_tol * sigma_1.
// Frames follow the phase convention: each left column's first entry of
// modulus > 1e-8 is rotated real positive, the compensating phase going
// into the right column.
SchmidtDecomposition schmidt_decompose(const PureState& state,
                                       double rank_tol = kDefaultRankTol);

// Schmidt rank of the evaluated expression, also called its length: the
// least number of product terms among all expressions of the same vector.
int length(const TensorExpression& expr, double rank_tol = kDefaultRankTol);

// Seeded sampling. With k: sum of k random orthonormal dyads with random
// positive coefficients, Schmidt rank exactly k. Without: normalized
// complex-Gaussian vector (full rank almost surely).
PureState sample_state(int n, int m, std::optional<int> k, std::uint64_t seed);

// Haar-style random orthonormal frame (QR of a Gaussian matrix with the
// R-diagonal phase fix), deterministic for a given generator state.
Mat random_orthonormal_frame(Rng& rng, int rows, int cols);

}  // namespace strata
