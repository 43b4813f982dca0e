#include <doctest.h>

#include <Eigen/Geometry>
#include <cmath>
#include <numbers>

#include "rotsync/so3.hpp"
#include "test_util.hpp"

using namespace rotsync;
using rotsync::test::RandomTangent;

namespace {
constexpr double kPi = std::numbers::pi;

// Truncated power series of expm([w]_x), the independent oracle for the
// Rodrigues path.
Eigen::Matrix3d ExpSeries(const TangentVector& w, int terms) {
  const Eigen::Matrix3d k = so3::Hat(w);
  Eigen::Matrix3d sum = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d power = Eigen::Matrix3d::Identity();
  double factorial = 1.0;
  for (int i = 1; i <= terms; ++i) {
    power = power * k;
    factorial *= i;
    sum += power / factorial;
  }
  return sum;
}
}  // namespace

TEST_CASE("hat map") {
  CHECK(so3::Hat(TangentVector::Zero()).isZero(0.0));

  Eigen::Matrix3d expected;
  expected << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  CHECK((so3::Hat({1, 0, 0}) - expected).norm() == 0.0);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TangentVector w = RandomTangent(rng, 5.0);
    const TangentVector v = RandomTangent(rng, 5.0);
    CHECK((so3::Hat(w) * v - w.cross(v)).norm() < 1e-14);
    CHECK((so3::Vee(so3::Hat(w)) - w).norm() == 0.0);
    // Linearity.
    const TangentVector u = RandomTangent(rng, 5.0);
    CHECK((so3::Hat(2.0 * w + u) - 2.0 * so3::Hat(w) - so3::Hat(u)).norm() < 1e-14);
  }
}

TEST_CASE("exp map") {
  CHECK((so3::ExpMap(TangentVector::Zero()) - Rotation::Identity()).norm() == 0.0);

  Eigen::Matrix3d quarter_z;
  quarter_z << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK((so3::ExpMap({0, 0, kPi / 2}) - quarter_z).norm() < 1e-15);

  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const TangentVector w = RandomTangent(rng, kPi - 0.1);
    CHECK((so3::ExpMap(w) - ExpSeries(w, 30)).norm() < 1e-10);
    CHECK(so3::IsRotation(so3::ExpMap(w)));
  }
}

TEST_CASE("log map") {
  CHECK(so3::LogMap(Rotation::Identity()).norm() == 0.0);

  const TangentVector w(0.3, -0.2, 0.1);
  CHECK((so3::LogMap(so3::ExpMap(w)) - w).norm() < 1e-10);

  SUBCASE("pi rotation about x") {
    const TangentVector got = so3::LogMap(so3::ExpMap({kPi, 0, 0}));
    CHECK((got - TangentVector(kPi, 0, 0)).norm() < 1e-9);
    CHECK((so3::ExpMap(got) - so3::ExpMap({kPi, 0, 0})).norm() < 1e-9);
  }

  SUBCASE("pi rotations about arbitrary axes reconstruct the input") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      TangentVector axis = RandomTangent(rng, 1.0).normalized();
      const Rotation r = so3::ExpMap(axis * kPi);
      const TangentVector got = so3::LogMap(r);
      CHECK(got.norm() == doctest::Approx(kPi).epsilon(1e-9));
      CHECK((so3::ExpMap(got) - r).norm() < 1e-7);
      // First nonzero component positive.
      for (int j = 0; j < 3; ++j) {
        if (std::abs(got[j]) > 1e-9 * kPi) {
          CHECK(got[j] > 0.0);
          break;
        }
      }
    }
  }

  SUBCASE("small-angle branch") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const TangentVector w = RandomTangent(rng, 1e-5);
      CHECK((so3::LogMap(so3::ExpMap(w)) - w).norm() < 1e-14);
    }
  }

  SUBCASE("round trip up to pi - 1e-3") {
    Rng rng(15);
    for (int trial = 0; trial < 500; ++trial) {
      const TangentVector w = RandomTangent(rng, kPi - 1e-3);
      CHECK((so3::LogMap(so3::ExpMap(w)) - w).norm() < 1e-8);
    }
  }
}

TEST_CASE("geodesic distance") {
  CHECK(so3::GeodesicDistance(Rotation::Identity(), Rotation::Identity()) == 0.0);
  for (int axis = 0; axis < 3; ++axis) {
    TangentVector w = TangentVector::Zero();
    w[axis] = kPi;
    CHECK(so3::GeodesicDistance(Rotation::Identity(), so3::ExpMap(w)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  Rng rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    const Rotation r1 = so3::SampleHaar(rng);
    const Rotation r2 = so3::SampleHaar(rng);
    const double d = so3::GeodesicDistance(r1, r2);
    CHECK(d == doctest::Approx(test::QuaternionDistance(r1, r2)).epsilon(1e-9));
    CHECK(d == doctest::Approx(so3::GeodesicDistance(r2, r1)).epsilon(1e-12));
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
  }
}

TEST_CASE("bi-invariance of the metric") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rotation r1 = so3::SampleHaar(rng);
    const Rotation r2 = so3::SampleHaar(rng);
    const Rotation r3 = so3::SampleHaar(rng);
    const double d = so3::GeodesicDistance(r1, r2);
    CHECK(std::abs(d - so3::GeodesicDistance(r3 * r1, r3 * r2)) < 1e-9);
    CHECK(std::abs(d - so3::GeodesicDistance(r1 * r3, r2 * r3)) < 1e-9);
  }
}

TEST_CASE("projection to SO(3)") {
  Rng rng(18);
  SUBCASE("idempotent on rotations") {
    for (int trial = 0; trial < 100; ++trial) {
      const Rotation r = so3::SampleHaar(rng);
      CHECK((so3::ProjectToSO3(r) - r).norm() < 1e-14);
    }
  }
  SUBCASE("positive scaling of identity") {
    CHECK((so3::ProjectToSO3(2.5 * Eigen::Matrix3d::Identity()) -
           Rotation::Identity()).norm() < 1e-14);
  }
  SUBCASE("beats random rotations") {
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::Matrix3d a;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a(r, c) = rng.Normal();
      }
      const Rotation best = so3::ProjectToSO3(a);
      const double achieved = (best - a).norm();
      for (int cand = 0; cand < 1000; ++cand) {
        CHECK(achieved <= (so3::SampleHaar(rng) - a).norm() + 1e-12);
      }
    }
  }
  SUBCASE("rank-deficient input is rejected") {
    Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
    a(0, 0) = 1.0;
    CHECK_THROWS_AS(so3::ProjectToSO3(a), std::domain_error);
  }
  SUBCASE("continuity under small perturbation") {
    for (int trial = 0; trial < 100; ++trial) {
      const Rotation r = so3::SampleHaar(rng);
      Eigen::Matrix3d noise;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) noise(i, j) = rng.Normal();
      }
      noise *= 1e-6 / noise.norm();
      CHECK((so3::ProjectToSO3(r + noise) - r).norm() < 1e-5);
    }
  }
}

TEST_CASE("Haar sampling") {
  SUBCASE("deterministic and valid") {
    Rng a(42), b(42);
    const Rotation ra = so3::SampleHaar(a);
    const Rotation rb = so3::SampleHaar(b);
    CHECK((ra - rb).norm() == 0.0);
    CHECK(so3::IsRotation(ra));
  }

  SUBCASE("moments match the Haar angle density") {
    Rng rng(19);
    const int samples = 100000;
    double trace_sum = 0.0, dist_sum = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Rotation r = so3::SampleHaar(rng);
      trace_sum += r.trace();
      dist_sum += so3::GeodesicDistance(Rotation::Identity(), r);
    }
    CHECK(std::abs(trace_sum / samples) < 0.02);

    // E d(I, R) = int_0^pi (theta/pi) (1 - cos theta)/pi dtheta by Simpson.
    const int steps = 2000;
    double integral = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double theta = kPi * i / steps;
      const double f = (theta / kPi) * (1.0 - std::cos(theta)) / kPi;
      const double coeff = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      integral += coeff * f;
    }
    integral *= (kPi / steps) / 3.0;
    CHECK(std::abs(dist_sum / samples - integral) < 0.005);
  }

  SUBCASE("invariance under fixed rotation") {
    // Mean trace of Q R should also vanish for fixed Q.
    Rng rng(20);
    Rng qrng(21);
    const Rotation q = so3::SampleHaar(qrng);
    double trace_sum = 0.0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) trace_sum += (q * so3::SampleHaar(rng)).trace();
    CHECK(std::abs(trace_sum / samples) < 0.02);
  }
}
