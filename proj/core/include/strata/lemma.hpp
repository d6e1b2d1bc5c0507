// Change-of-basis recovery between two linearly independent tensor-sum
// expressions of the same vector: finds the non-degenerate k x k matrix C
// with (z_1..z_k) = (y_1..y_k) C and (w_1..w_k) = (x_1..x_k) (C^t)^{-1},
// and certifies it through explicit residuals.

#pragma once

#include "strata/states.hpp"
#include "strata/types.hpp"

namespace strata {

inline constexpr double kLemmaTol = 1e-8;

struct LemmaCertificate {
  Mat C;                  // k x k, non-degenerate when certified
  double residual_z;      // max column norm of (z_1..z_k) - (y_1..y_k) C
  double residual_w;      // max column norm of (w_1..w_k) - (x_1..x_k) (C^t)^{-1}
  double block_residual;  // max deviation of A^t B from diag(E_k, 0)
  bool certified;         // all residuals below the tolerance
  double tolerance;
};

// expr1 carries terms (x_i, y_i), expr2 terms (w_i, z_i); both must be
// linearly independent, of equal length, and evaluate to the same vector
// within tol.
LemmaCertificate recover_change_of_basis(const TensorExpression& expr1,
                                         const TensorExpression& expr2,
                                         double tol = kLemmaTol);

}  // namespace strata
