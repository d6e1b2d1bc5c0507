#include "strata/embedding.hpp"

#include <Eigen/QR>

#include <cmath>

namespace strata {

EmbeddedCoordinates embed_coordinates(const StratumPoint& p) {
  const Mat x = p.left().full_matrix();          // k x n
  const Mat a = p.core().representative();       // k x k
  const Mat y = p.right().full_matrix();         // k x m
  EmbeddedCoordinates out;
  out.n = p.n();
  out.m = p.m();
  out.d = x.transpose() * a * y;
  return out;
}

PureState embed(const StratumPoint& p) {
  const Vec v = embed_coordinates(p).vectorized();
  return PureState(p.n(), p.m(), phase_canonicalized(v / v.norm()));
}

StratumPoint to_stratum_point(const PureState& state, double rank_tol) {
  const SchmidtDecomposition sd = schmidt_decompose(state, rank_tol);

  // The left frame spans the column space of d, the right frame its
  // (unconjugated) row space; both charts are canonical in the subspace.
  GrassmannChartPoint left = grassmann_from_span(sd.left_frame);
  GrassmannChartPoint right = grassmann_from_span(sd.right_frame);

  // Express d in the echelon chart bases: solve X^t A Y = d by two
  // least-squares solves (exact up to roundoff since the spans match).
  const Mat d = state.matrix();
  const Mat xt = left.full_matrix().transpose();   // n x k, full column rank
  const Mat yt = right.full_matrix().transpose();  // m x k, full column rank
  const Mat middle = xt.colPivHouseholderQr().solve(d);  // k x m
  const Mat a = yt.colPivHouseholderQr().solve(middle.transpose()).transpose();

  return StratumPoint(std::move(left), ProjectiveMatrixPoint(a), std::move(right));
}

double roundtrip_fidelity(const PureState& state) {
  return state.fidelity(embed(to_stratum_point(state)));
}

}  // namespace strata
