// The correspondence between rank-k pure states and chart points of
// G(n,k) x (CP^{k^2-1} \ hypersurface) x G(m,k): the forward polynomial
// embedding d_js = sum_l (X^t A)_jl Y_ls and its inverse.

#pragma once

#include "strata/charts.hpp"
#include "strata/states.hpp"
#include "strata/types.hpp"

namespace strata {

// Homogeneous coordinates d of the embedded state, before normalization.
struct EmbeddedCoordinates {
  int n = 0;
  int m = 0;
  Mat d;  // n x m, rank k

  Vec vectorized() const { return flatten_rowmajor(d); }
};

// Raw polynomial coordinates d = X^t A Y of the chart point.
EmbeddedCoordinates embed_coordinates(const StratumPoint& p);

// The embedded pure state: vectorized d, normalized, global phase fixed.
// Its Schmidt rank is exactly p.k().
PureState embed(const StratumPoint& p);

// Inverse of the embedding: Grassmann factors are the canonical charts of
// the column/row spaces of the coefficient matrix; the core is the unique
// k x k matrix solving X^t A Y = d in those charts, canonicalized.
StratumPoint to_stratum_point(const PureState& state,
                              double rank_tol = kDefaultRankTol);

// |<state, embed(to_stratum_point(state))>|; contractually >= 1 - 1e-10.
double roundtrip_fidelity(const PureState& state);

}  // namespace strata
