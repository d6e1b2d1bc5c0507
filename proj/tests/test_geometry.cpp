#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "strata/geometry.hpp"
#include "test_support.hpp"

using namespace strata;
using namespace test_support;

TEST_CASE("metric at the chart origin is the identity") {
  const ChartPoint origin(4, 1, Vec::Zero(3));
  for (auto mode : {MetricMode::verbatim, MetricMode::fubini_study}) {
    const auto metric = metric_tensor(origin, mode);
    CHECK(max_abs_diff(metric.h, Mat::Identity(3, 3)) < 1e-14);
  }
}

TEST_CASE("hand-evaluated N=2 point") {
  Vec z(1);
  z << cxd(1.0, 0.0);
  const ChartPoint pt(2, 1, z);
  // (2*1 - 1*1)/2 = 1/2 with the plain denominator, 1/4 with it squared.
  CHECK(std::abs(metric_tensor(pt, MetricMode::verbatim).h(0, 0) - cxd(0.5)) < 1e-15);
  CHECK(std::abs(metric_tensor(pt, MetricMode::fubini_study).h(0, 0) - cxd(0.25)) < 1e-15);
}

TEST_CASE("metric is Hermitian positive definite at random points") {
  Rng rng(6);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ChartPoint pt(n, 1 + trial % n, rng.complex_gaussian_matrix(n - 1, 1).col(0));
      for (auto mode : {MetricMode::verbatim, MetricMode::fubini_study}) {
        const auto metric = metric_tensor(pt, mode);
        CHECK(max_abs_diff(metric.h, metric.h.adjoint()) < 1e-12);
        const RVec eigs = jacobi_hermitian_eigenvalues(metric.h);
        CHECK(eigs(eigs.size() - 1) > 0.0);
      }
    }
  }
}

TEST_CASE("the two modes differ by the factor 1 + |z|^2") {
  Rng rng(61);
  const Vec z = rng.complex_gaussian_matrix(4, 1).col(0);
  const ChartPoint pt(5, 2, z);
  const double s = 1.0 + z.squaredNorm();
  const Mat verbatim = metric_tensor(pt, MetricMode::verbatim).h;
  const Mat fs = metric_tensor(pt, MetricMode::fubini_study).h;
  CHECK(max_abs_diff(verbatim, fs * s) < 1e-12);
}

TEST_CASE("chart point validation") {
  CHECK_THROWS_AS(ChartPoint(3, 0, Vec::Zero(2)), DimensionMismatchError);
  CHECK_THROWS_AS(ChartPoint(3, 4, Vec::Zero(2)), DimensionMismatchError);
  CHECK_THROWS_AS(ChartPoint(3, 1, Vec::Zero(3)), DimensionMismatchError);
}

TEST_CASE("density stratum dimension formula") {
  for (long long n = 1; n <= 10; ++n) {
    CHECK(density_stratum_dimension(n, 1) == 2 * n - 2);  // projective space
    CHECK(density_stratum_dimension(n, n) == n * n - 1);  // full-rank interior
  }
  CHECK(density_stratum_dimension(2, 1) == 2);  // Bloch sphere
  CHECK_THROWS_AS(density_stratum_dimension(3, 4), InvalidRankError);
  CHECK_THROWS_AS(density_stratum_dimension(3, 0), InvalidRankError);
}

TEST_CASE("stratum dimension certificates") {
  const auto segre = certify_stratum_dimension(3, 3, 1, 2);
  CHECK(segre.claimed == 8);  // CP^2 x CP^2
  CHECK(segre.measured == 8);
  CHECK(segre.passed);

  const auto mid = certify_stratum_dimension(3, 4, 2, 2);
  CHECK(mid.claimed == 18);
  CHECK(mid.measured == 18);
  CHECK(mid.passed);

  const auto full = certify_stratum_dimension(2, 2, 2, 2);
  CHECK(full.claimed == 6);  // CP^3 minus the hypersurface
  CHECK(full.measured == 6);
  CHECK(full.passed);
}

TEST_CASE("rank measurement is stable across base points") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto cert = certify_stratum_dimension(3, 4, 2, seed);
    CHECK(cert.measured == 18);
    CHECK(cert.passed);
  }
  RVec mu(2);
  mu << 0.8, 0.6;
  const OrbitSpec spec(2, 3, mu);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto cert = certify_orbit_dimension(spec, seed);
    CHECK(cert.measured == orbit_real_dimension(2, 3, 2));
    CHECK(cert.passed);
  }
}

TEST_CASE("orbit dimension certificates") {
  RVec mu1(1);
  mu1 << 1.0;
  const auto product = certify_orbit_dimension(OrbitSpec(2, 2, mu1), 3);
  CHECK(product.claimed == 4);  // CP^1 x CP^1
  CHECK(product.measured == 4);
  CHECK(product.passed);

  RVec mu(2);
  mu << 0.8, 0.6;
  const auto mid = certify_orbit_dimension(OrbitSpec(3, 4, mu), 3);
  CHECK(mid.claimed == 17);
  CHECK(mid.measured == 17);
  CHECK(mid.passed);
}

TEST_CASE("degenerate coefficients drop the measured rank") {
  const double r = 1.0 / std::sqrt(2.0);
  RVec mu(2);
  mu << r, r;
  const auto cert = certify_orbit_dimension(OrbitSpec(2, 2, mu), 4);
  CHECK(cert.claimed == 5);
  CHECK(cert.measured == 3);  // maximally entangled orbit is U(2) mod phase
  CHECK(cert.measured < cert.claimed);
  CHECK(cert.degenerate_coefficients());
  CHECK_FALSE(cert.passed);
}

TEST_CASE("certificates expose a confident spectral gap") {
  const auto cert = certify_stratum_dimension(4, 5, 2, 11);
  CHECK(cert.passed);
  CHECK(cert.gap_ratio > 1e4);
  // Claimed strictly below the parameter count happens only off the
  // measured manifold; the singular value list is descending.
  for (Eigen::Index i = 0; i + 1 < cert.singular_values.size(); ++i)
    CHECK(cert.singular_values(i) >= cert.singular_values(i + 1));
}

TEST_CASE("edge configuration n = m = k = 1") {
  CHECK(certify_stratum_dimension(1, 1, 1, 1).passed);
  RVec mu1(1);
  mu1 << 1.0;
  const auto cert = certify_orbit_dimension(OrbitSpec(1, 1, mu1), 1);
  CHECK(cert.claimed == 0);
  CHECK(cert.passed);
}
