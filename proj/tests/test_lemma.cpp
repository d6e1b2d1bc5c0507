#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "strata/lemma.hpp"
#include "strata/states.hpp"
#include "test_support.hpp"

using namespace strata;
using namespace test_support;

namespace {

// Linearly independent expression of a random rank-k state.
TensorExpression random_expression(int n, int m, int k, std::uint64_t seed) {
  const auto sd = schmidt_decompose(sample_state(n, m, k, seed));
  Mat left(n, k), right(m, k);
  for (int i = 0; i < k; ++i) {
    left.col(i) = sd.coefficients(i) * sd.left_frame.col(i);
    right.col(i) = sd.right_frame.col(i);
  }
  return TensorExpression::from_matrices(left, right);
}

// Well-conditioned random k x k change of basis.
Mat random_mixing(Rng& rng, int k) {
  while (true) {
    Mat c = rng.complex_gaussian_matrix(k, k);
    Eigen::JacobiSVD<Mat> svd(c);
    if (svd.singularValues()(k - 1) > 0.2 * svd.singularValues()(0)) return c;
  }
}

// Transports expr through C per the change-of-basis relations.
TensorExpression transported(const TensorExpression& expr, const Mat& c) {
  const Mat z = expr.right_matrix() * c;
  const Mat w = c.fullPivLu().solve(expr.left_matrix().transpose()).transpose();
  return TensorExpression::from_matrices(w, z);
}

}  // namespace

TEST_CASE("identical expressions recover the identity") {
  const auto expr = random_expression(3, 4, 2, 5);
  const auto cert = recover_change_of_basis(expr, expr);
  CHECK(cert.certified);
  CHECK(max_abs_diff(cert.C, Mat::Identity(2, 2)) < 1e-12);
  CHECK(cert.residual_z < 1e-12);
  CHECK(cert.residual_w < 1e-12);
  CHECK(cert.block_residual < 1e-12);
}

TEST_CASE("scalar rescaling recovers C = 1/2") {
  Rng rng(3);
  const Vec x = rng.complex_gaussian_matrix(3, 1).col(0);
  const Vec y = rng.complex_gaussian_matrix(4, 1).col(0);
  const TensorExpression expr1(3, 4, {{x, y}});
  const TensorExpression expr2(3, 4, {{Vec(2.0 * x), Vec(0.5 * y)}});
  const auto cert = recover_change_of_basis(expr1, expr2);
  CHECK(cert.certified);
  CHECK(std::abs(cert.C(0, 0) - 0.5) < 1e-12);
}

TEST_CASE("generate-then-recover returns the planted mixing") {
  Rng rng(7);
  for (int k = 1; k <= 5; ++k) {
    const auto expr1 = random_expression(5, 6, k, 100 + k);
    const Mat c0 = random_mixing(rng, k);
    const auto expr2 = transported(expr1, c0);
    const auto cert = recover_change_of_basis(expr1, expr2);
    CHECK(cert.certified);
    CHECK(max_abs_diff(cert.C, c0) < 1e-8);
    CHECK(cert.block_residual < 1e-8);
  }
}

TEST_CASE("composition of recoveries multiplies") {
  Rng rng(21);
  const auto expr1 = random_expression(4, 5, 3, 9);
  const Mat c1 = random_mixing(rng, 3);
  const Mat c2 = random_mixing(rng, 3);
  const auto expr2 = transported(expr1, c1);
  const auto expr3 = transported(expr2, c2);
  const Mat c12 = recover_change_of_basis(expr1, expr2).C;
  const Mat c23 = recover_change_of_basis(expr2, expr3).C;
  const Mat c13 = recover_change_of_basis(expr1, expr3).C;
  CHECK(max_abs_diff(c13, c12 * c23) < 1e-7);
}

TEST_CASE("inverse symmetry") {
  Rng rng(22);
  const auto expr1 = random_expression(4, 4, 3, 10);
  const auto expr2 = transported(expr1, random_mixing(rng, 3));
  const Mat fwd = recover_change_of_basis(expr1, expr2).C;
  const Mat bwd = recover_change_of_basis(expr2, expr1).C;
  CHECK(max_abs_diff(bwd, fwd.fullPivLu().inverse()) < 1e-7);
}

TEST_CASE("error contracts") {
  const auto expr1 = random_expression(3, 4, 2, 1);
  const auto other = random_expression(3, 4, 2, 2);
  CHECK_THROWS_AS(recover_change_of_basis(expr1, other), NotSameStateError);

  const auto longer = random_expression(3, 4, 3, 3);
  CHECK_THROWS_AS(recover_change_of_basis(expr1, longer), UnequalLengthError);

  const Vec x = unit(3, 0), y1 = unit(4, 0), y2 = unit(4, 1);
  const TensorExpression dependent(3, 4, {{x, y1}, {x, y2}});
  CHECK_THROWS_AS(recover_change_of_basis(dependent, dependent), NotIndependentError);
}
