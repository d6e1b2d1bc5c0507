// Orbits of fixed Schmidt coefficients: parameterization by orthonormal
// frames plus k-1 relative torus phases, membership, and the closed-form
// real dimension 2k(m+n-k) - k - 1.

#pragma once

#include "strata/states.hpp"
#include "strata/types.hpp"

namespace strata {

// Coefficient vector of an orbit: descending, positive, sum of squares 1.
class OrbitSpec {
 public:
  OrbitSpec(int n, int m, RVec mu);

  // Rescales mu to unit square-sum before validating; returns the applied
  // correction |1 - sum mu_i^2| through `adjustment` when given.
  static OrbitSpec normalized(int n, int m, RVec mu, double* adjustment = nullptr);

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return static_cast<int>(mu_.size()); }
  const RVec& mu() const { return mu_; }
  bool degenerate() const { return degenerate_; }  // some gap below 1e-8

 private:
  int n_, m_;
  RVec mu_;
  bool degenerate_;
};

// A point of the orbit: frames a_i, b_i and relative phases beta with
// theta_1 = 0, theta_{i+1} = beta_i.
class OrbitPoint {
 public:
  OrbitPoint(OrbitSpec spec, Mat left_frame, Mat right_frame, RVec phases,
             double frame_tol = 1e-10);

  const OrbitSpec& spec() const { return spec_; }
  const Mat& left_frame() const { return left_frame_; }    // n x k
  const Mat& right_frame() const { return right_frame_; }  // m x k
  const RVec& phases() const { return phases_; }           // k - 1

  // sum_i mu_i e^{i theta_i} a_i (x) b_i, unit norm by construction.
  PureState to_state() const;

 private:
  OrbitSpec spec_;
  Mat left_frame_;
  Mat right_frame_;
  RVec phases_;
};

PureState orbit_point_to_state(const OrbitPoint& pt);

// True iff the full sorted singular-value vectors of both states agree
// entrywise within tol.
bool same_orbit(const PureState& s1, const PureState& s2, double tol = 1e-8);

// Real dimension 2k(m+n-k) - k - 1 of the fixed-coefficient orbit with
// distinct coefficients. Pure formula, no validation.
long long orbit_real_dimension(long long n, long long m, long long k);

// Haar-style random frames and uniform phases, deterministic per seed.
OrbitPoint sample_orbit_point(const OrbitSpec& spec, std::uint64_t seed);

}  // namespace strata
