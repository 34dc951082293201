#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "procrustes/oracle.hpp"
#include "support/test_helpers.hpp"

using namespace procrustes;
using namespace procrustes::oracle;
using testutil::random_matrix;

TEST_CASE("splitmix64 reference stream") {
  // first outputs of the reference splitmix64 seeded with 0
  SplitMix64 rng(0);
  CHECK(rng.next_u64() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next_u64() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next_u64() == 0x06c45d188009454fULL);

  SplitMix64 a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  SplitMix64 u(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.next_uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("rotation_2d") {
  CHECK((rotation_2d(0.0) - Matd::Identity(2, 2)).norm() == 0.0);

  Matd quarter(2, 2);
  quarter << 0, -1, 1, 0;
  CHECK((rotation_2d(std::numbers::pi / 2) - quarter).norm() <= 1e-15);

  SplitMix64 rng(70);
  for (int t = 0; t < 100; ++t) {
    const double a = rng.next_uniform(-6.0, 6.0);
    const double b = rng.next_uniform(-6.0, 6.0);
    CHECK((rotation_2d(a) * rotation_2d(b) - rotation_2d(a + b)).norm() <= 1e-12);
  }
}

TEST_CASE("optimal_angle_2d") {
  const auto ident = optimal_angle_2d(Matd::Identity(2, 2));
  CHECK(ident.theta == 0.0);
  CHECK(ident.value == 2.0);

  Matd mirror(2, 2);
  mirror << 1, 0, 0, -1;
  const auto flat = optimal_angle_2d(mirror);
  CHECK(flat.value == 0.0);
  CHECK(flat.theta == 0.0);

  CHECK(optimal_angle_2d(Matd::Zero(2, 2)).value == 0.0);

  SplitMix64 rng(71);
  for (int t = 0; t < 100; ++t) {
    const Matd m = random_matrix(2, rng);
    const auto best = optimal_angle_2d(m);
    const double a = m(0, 0) + m(1, 1);
    const double b = m(0, 1) - m(1, 0);
    for (int k = 0; k < 100000; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / 100000.0;
      CHECK(std::cos(theta) * a + std::sin(theta) * b <= best.value + 1e-12);
    }
    // the reported angle attains the reported value
    CHECK(std::abs(std::cos(best.theta) * a + std::sin(best.theta) * b - best.value) <= 1e-12);
  }

  CHECK_THROWS_AS(optimal_angle_2d(Matd::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("random_rotation") {
  Matd one = random_rotation(1, RngSeed{5});
  CHECK(one(0, 0) == 1.0);

  SplitMix64 rng(72);
  for (int t = 0; t < 120; ++t) {
    const int d = 1 + t % 6;
    const Matd r = random_rotation(d, rng);
    CHECK(is_orthogonal(r, 1e-10));
    CHECK(std::abs(determinant(r) - 1.0) <= 1e-10);
  }

  const Matd first = random_rotation(4, RngSeed{99});
  const Matd second = random_rotation(4, RngSeed{99});
  CHECK((first - second).norm() == 0.0);

  CHECK_THROWS_AS(random_rotation(0, RngSeed{1}), std::invalid_argument);
}

TEST_CASE("random_orthogonal") {
  CHECK((random_orthogonal(3, 1, RngSeed{13}) - random_rotation(3, RngSeed{13})).norm() == 0.0);

  const Matd neg1 = random_orthogonal(1, -1, RngSeed{4});
  CHECK(neg1(0, 0) == -1.0);

  SplitMix64 rng(73);
  for (int t = 0; t < 120; ++t) {
    const int d = 1 + t % 6;
    const int sign = t % 2 ? 1 : -1;
    const Matd w = random_orthogonal(d, sign, rng);
    CHECK(is_orthogonal(w, 1e-10));
    CHECK(std::abs(determinant(w) - sign) <= 1e-10);
  }

  CHECK_THROWS_AS(random_orthogonal(2, 0, RngSeed{1}), std::invalid_argument);
}

TEST_CASE("reflection_fixed_vector") {
  SUBCASE("axis-aligned reflection") {
    Matd w = Matd::Identity(3, 3);
    w(2, 2) = -1.0;
    const Vecd x = reflection_fixed_vector(w);
    Vecd e3 = Vecd::Zero(3);
    e3[2] = 1.0;
    CHECK((x - e3).norm() <= 1e-12);
  }

  SUBCASE("one dimension") {
    Matd w(1, 1);
    w << -1.0;
    const Vecd x = reflection_fixed_vector(w);
    CHECK(x[0] == 1.0);
  }

  SUBCASE("random reflections") {
    SplitMix64 rng(74);
    for (int t = 0; t < 200; ++t) {
      const int d = 1 + t % 6;
      const Matd w = random_orthogonal(d, -1, rng);
      const Vecd x = reflection_fixed_vector(w);
      CHECK(std::abs(x.norm() - 1.0) <= 1e-12);
      CHECK((w * x + x).norm() <= 1e-8);
      CHECK((w.transpose() * x + x).norm() <= 1e-8);
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(reflection_fixed_vector(Matd::Identity(3, 3)), std::invalid_argument);
    Matd stretched = Matd::Identity(2, 2);
    stretched(0, 0) = 3.0;
    CHECK_THROWS_AS(reflection_fixed_vector(stretched), std::invalid_argument);
    CHECK_THROWS_AS(reflection_fixed_vector(Matd::Zero(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("check_trace_bounds") {
  Vecd d321(3);
  d321 << 3, 2, 1;

  SUBCASE("identity attains the diagonal bound") {
    const auto r = check_trace_bounds(Matd::Identity(3, 3), d321, Matd::Identity(3, 3));
    CHECK(r.all_hold());
    CHECK_FALSE(r.reflection_applicable);
    CHECK(std::abs(r.diagonal_slack) <= 1e-12);
  }

  SUBCASE("axis reflection attains the reflection bound") {
    Matd w = Matd::Identity(3, 3);
    w(2, 2) = -1.0;
    const auto r = check_trace_bounds(w, d321, Matd::Identity(3, 3));
    CHECK(r.all_hold());
    CHECK(r.reflection_applicable);
    // tr(WD) = 3 + 2 - 1 = 4 equals the bound exactly
    CHECK(std::abs(r.reflection_slack) <= 1e-12);
  }

  SUBCASE("fuzzed triples of both determinant signs") {
    SplitMix64 rng(75);
    for (int sign : {1, -1}) {
      for (int t = 0; t < 1000; ++t) {
        const int d = 1 + t % 6;
        Vecd sigma(d);
        for (int i = 0; i < d; ++i) sigma[i] = rng.next_uniform(0.0, 10.0);
        std::sort(sigma.data(), sigma.data() + d, std::greater<double>());
        const Matd w = random_orthogonal(d, sign, rng);
        const Matd b = random_orthogonal(d, t % 2 ? 1 : -1, rng);
        const auto r = check_trace_bounds(w, sigma, b);
        CHECK(r.all_hold());
        CHECK(r.reflection_applicable == (sign == -1));
      }
    }
  }

  SUBCASE("a corrupted bound is caught") {
    // lowering the diagonal bound by twice the largest entry must flag
    const auto r = check_trace_bounds(Matd::Identity(3, 3), d321, Matd::Identity(3, 3));
    const double tol = 1e-9 * (1.0 + d321.sum());
    CHECK_FALSE(r.diagonal_slack - 2.0 * d321[0] >= -tol);
  }

  SUBCASE("preconditions") {
    Vecd unsorted(2);
    unsorted << 1, 2;
    CHECK_THROWS_AS(check_trace_bounds(Matd::Identity(2, 2), unsorted, Matd::Identity(2, 2)),
                    std::invalid_argument);
    Vecd negative(2);
    negative << 1, -1;
    CHECK_THROWS_AS(check_trace_bounds(Matd::Identity(2, 2), negative, Matd::Identity(2, 2)),
                    std::invalid_argument);
    Matd stretched = Matd::Identity(2, 2);
    stretched(1, 1) = 5.0;
    Vecd ok(2);
    ok << 2, 1;
    CHECK_THROWS_AS(check_trace_bounds(stretched, ok, Matd::Identity(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("rigid motion sampling") {
  const auto one = sample_rigid_motions(3, 1, 2.0, RngSeed{21});
  const auto again = sample_rigid_motions(3, 1, 2.0, RngSeed{21});
  REQUIRE(one.size() == 1);
  CHECK((one[0].rotation - again[0].rotation).norm() == 0.0);
  CHECK((one[0].translation - again[0].translation).norm() == 0.0);

  const auto other = sample_rigid_motions(3, 1, 2.0, RngSeed{22});
  CHECK((one[0].rotation - other[0].rotation).norm() > 0.0);

  const auto many = sample_rigid_motions(4, 50, 3.0, RngSeed{23});
  for (const auto& m : many) {
    CHECK(is_orthogonal(m.rotation, 1e-10));
    CHECK(std::abs(determinant(m.rotation) - 1.0) <= 1e-10);
    CHECK(m.translation.cwiseAbs().maxCoeff() <= 3.0);
  }

  CHECK_THROWS_AS(sample_rigid_motions(0, 1, 1.0, RngSeed{1}), std::invalid_argument);
  CHECK_THROWS_AS(sample_rigid_motions(2, 0, 1.0, RngSeed{1}), std::invalid_argument);
  CHECK_THROWS_AS(sample_rigid_motions(2, 1, 0.0, RngSeed{1}), std::invalid_argument);
}
