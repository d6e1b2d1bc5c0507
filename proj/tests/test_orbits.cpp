#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "strata/orbits.hpp"
#include "test_support.hpp"

using namespace strata;
using namespace test_support;

namespace {

RVec mu2(double a, double b) {
  RVec mu(2);
  mu << a, b;
  return mu;
}

}  // namespace

TEST_CASE("rank-one orbit points are product states") {
  RVec mu(1);
  mu << 1.0;
  const auto pt = sample_orbit_point(OrbitSpec(3, 4, mu), 5);
  const PureState s = pt.to_state();
  CHECK(schmidt_decompose(s).rank() == 1);
  const Vec expected = kron(pt.left_frame().col(0), pt.right_frame().col(0));
  CHECK((s.vec() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("a pi relative phase flips the second term") {
  const double r = 1.0 / std::sqrt(2.0);
  Mat a(2, 2), b(2, 2);
  a.setIdentity();
  b.setIdentity();
  RVec beta(1);
  beta << kPi;
  const OrbitPoint pt(OrbitSpec(2, 2, mu2(r, r)), a, b, beta);
  Vec expected = Vec::Zero(4);
  expected(0) = r;
  expected(3) = -r;
  CHECK((pt.to_state().vec() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orbit states reproduce the prescribed coefficients") {
  const OrbitSpec spec(3, 4, mu2(0.8, 0.6));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto sd = schmidt_decompose(sample_orbit_point(spec, seed).to_state());
    REQUIRE(sd.rank() == 2);
    CHECK((sd.coefficients - spec.mu()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("same_orbit accepts local-unitary twins") {
  Rng rng(44);
  const PureState s = sample_state(3, 4, 3, 21);
  const Mat u = random_unitary(rng, 3);
  const Mat v = random_unitary(rng, 4);
  const PureState rotated(3, 4, flatten_rowmajor(u * s.matrix() * v.transpose()));
  CHECK(same_orbit(s, rotated));
}

TEST_CASE("same_orbit distinguishes ranks") {
  Vec product = Vec::Zero(4);
  product(0) = 1.0;
  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK_FALSE(same_orbit(PureState(2, 2, product), PureState(2, 2, bell)));
  CHECK_THROWS_AS(same_orbit(PureState(2, 2, product), sample_state(2, 3, 1, 1)),
                  DimensionMismatchError);
}

TEST_CASE("independent samples of one spec share the orbit") {
  const OrbitSpec spec(3, 4, mu2(0.9, std::sqrt(1.0 - 0.81)));
  const PureState s1 = sample_orbit_point(spec, 100).to_state();
  const PureState s2 = sample_orbit_point(spec, 200).to_state();
  CHECK(same_orbit(s1, s2));
}

TEST_CASE("same_orbit is an equivalence relation on a sampled set") {
  const OrbitSpec spec(2, 3, mu2(0.8, 0.6));
  std::vector<PureState> states;
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    states.push_back(sample_orbit_point(spec, seed).to_state());
  for (const auto& a : states) CHECK(same_orbit(a, a));
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = 0; j < states.size(); ++j) {
      CHECK(same_orbit(states[i], states[j]) == same_orbit(states[j], states[i]));
      CHECK(same_orbit(states[i], states[j]));
    }
}

TEST_CASE("orbit dimension formula") {
  CHECK(orbit_real_dimension(3, 4, 2) == 17);
  CHECK(orbit_real_dimension(2, 2, 1) == 4);  // CP^1 x CP^1
  CHECK(orbit_real_dimension(2, 2, 2) == 5);
}

TEST_CASE("orbit dimension matches the product-manifold sum exactly") {
  for (long long n = 1; n <= 10; ++n)
    for (long long m = n; m <= 10; ++m)
      for (long long k = 1; k <= n; ++k) {
        long long sum = k - 1;
        for (long long i = 1; i <= k; ++i) sum += 2 * (n - i) + 2 * (m - i);
        CHECK(orbit_real_dimension(n, m, k) == sum);
      }
}

TEST_CASE("orbit sampling is deterministic per seed") {
  const OrbitSpec spec(3, 4, mu2(0.8, 0.6));
  const auto p1 = sample_orbit_point(spec, 9);
  const auto p2 = sample_orbit_point(spec, 9);
  CHECK(max_abs_diff(p1.left_frame(), p2.left_frame()) == 0.0);
  CHECK(max_abs_diff(p1.right_frame(), p2.right_frame()) == 0.0);
  CHECK((p1.phases() - p2.phases()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(OrbitSpec(2, 2, RVec::Ones(3)), InvalidRankError);
  RVec ascending(2);
  ascending << 0.6, 0.8;
  CHECK_THROWS_AS(OrbitSpec(2, 2, ascending), std::invalid_argument);
  RVec unnormalized(2);
  unnormalized << 0.8, 0.3;
  CHECK_THROWS_AS(OrbitSpec(2, 2, unnormalized), std::invalid_argument);
  const OrbitSpec fixed = OrbitSpec::normalized(2, 2, unnormalized);
  CHECK(fixed.mu().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));

  const double r = 1.0 / std::sqrt(2.0);
  CHECK(OrbitSpec(2, 2, mu2(r, r)).degenerate());
  CHECK_FALSE(OrbitSpec(2, 2, mu2(0.8, 0.6)).degenerate());
}

TEST_CASE("orbit points require orthonormal frames") {
  Mat bad = Mat::Ones(2, 2);
  CHECK_THROWS_AS(OrbitPoint(OrbitSpec(2, 2, mu2(0.8, 0.6)), bad, Mat::Identity(2, 2),
                             RVec::Zero(1)),
                  FrameNotOrthonormalError);
}
