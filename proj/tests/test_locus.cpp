#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "locuskit/locus.hpp"
#include "test_util.hpp"

using namespace locuskit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;

PlanarPoint on_line(const LocusResult& line, double t) {
  const double a = line.line_coeffs[0];
  const double b = line.line_coeffs[1];
  const double c = line.line_coeffs[2];
  const double n2 = a * a + b * b;
  return {-c * a / n2 - b * t, -c * b / n2 + a * t};
}
}  // namespace

TEST_CASE("solve_radius spot values") {
  CHECK_THAT(solve_radius(PowerSumSpec(7, 1), 2.0, 91.0),
             WithinRel(3.0, 1e-12));
  CHECK_THAT(solve_radius(PowerSumSpec(5, 4), 1.0, 350.0),
             WithinRel(1.0, 1e-12));
}

TEST_CASE("solve_radius near the center") {
  const PowerSumSpec spec(3, 2);
  const double target = 3.000003;
  const double ell = solve_radius(spec, 1.0, target);
  // u solves u^2 + 4u = 1e-6, so ell is close to 5e-4
  CHECK(ell > 4e-4);
  CHECK(ell < 6e-4);
  CHECK_THAT(power_sum_closed(spec, 1.0, ell), WithinRel(target, 1e-12));
}

TEST_CASE("solve_radius error paths") {
  CHECK_THROWS_AS(solve_radius(PowerSumSpec(3, 2), 1.0, 3.0), NoRootError);
  CHECK_THROWS_AS(solve_radius(PowerSumSpec(3, 2), 1.0, 1.0), NoRootError);
  CHECK_THROWS_AS(solve_radius(PowerSumSpec(3, 3), 1.0, 100.0), DomainError);
  CHECK_THROWS_AS(solve_radius(PowerSumSpec(3, 2), -1.0, 100.0), DomainError);
}

TEST_CASE("solve_radius round trip") {
  testutil::Rng rng(0x5eed0301);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(3, 12);
    const int m = rng.uniform_int(1, n - 1);
    const double r = rng.uniform(0.5, 3.0);
    const double ell = rng.uniform(0.1, 5.0);
    const PowerSumSpec spec(n, m);
    const double target = power_sum_closed(spec, r, ell);
    const double recovered = solve_radius(spec, r, target);
    REQUIRE(testutil::rel_err(recovered, ell) <= 1e-10);
  }
}

TEST_CASE("classify_power_locus spot values") {
  const auto point = classify_power_locus(PowerSumSpec(4, 1), 1.0, 4.0);
  CHECK(point.kind == LocusKind::Point);
  CHECK(point.circle_center.x == 0.0);
  CHECK(point.circle_center.y == 0.0);

  const auto circle = classify_power_locus(PowerSumSpec(4, 1), 1.0, 8.0);
  REQUIRE(circle.kind == LocusKind::Circle);
  CHECK_THAT(circle.circle_radius, WithinRel(1.0, 1e-12));

  const auto empty = classify_power_locus(PowerSumSpec(3, 2), 1.0, 2.0);
  CHECK(empty.kind == LocusKind::Empty);

  CHECK_THROWS_AS(classify_power_locus(PowerSumSpec(4, 4), 1.0, 8.0),
                  DomainError);
}

TEST_CASE("classification band around the point case") {
  const PowerSumSpec spec(5, 3);
  const double r = 1.3;
  const double center_sum = 5.0 * int_pow(r * r, 3);
  CHECK(classify_power_locus(spec, r, center_sum * (1.0 + 5e-10)).kind ==
        LocusKind::Point);
  CHECK(classify_power_locus(spec, r, center_sum * (1.0 - 5e-10)).kind ==
        LocusKind::Point);
  CHECK(classify_power_locus(spec, r, center_sum * (1.0 + 1e-8)).kind ==
        LocusKind::Circle);
  CHECK(classify_power_locus(spec, r, center_sum * (1.0 - 1e-8)).kind ==
        LocusKind::Empty);
  // band override
  CHECK(classify_power_locus(spec, r, center_sum * (1.0 + 1e-8), 1e-7).kind ==
        LocusKind::Point);
}

TEST_CASE("classification trichotomy over a sum grid") {
  testutil::Rng rng(0x5eed0302);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(3, 12);
    const int m = rng.uniform_int(1, n - 1);
    const double r = rng.uniform(0.5, 2.0);
    const PowerSumSpec spec(n, m);
    const double center_sum = n * int_pow(r * r, m);
    int empties = 0, points = 0, circles = 0;
    for (int i = 0; i <= 60; ++i) {
      const double s = center_sum * (0.5 + 1.5 * i / 60.0);
      const auto result = classify_power_locus(spec, r, s);
      switch (result.kind) {
        case LocusKind::Empty: ++empties; break;
        case LocusKind::Point: ++points; break;
        case LocusKind::Circle:
          ++circles;
          CHECK(result.circle_radius > 0.0);
          break;
        default: FAIL("unexpected kind");
      }
    }
    CHECK(empties > 0);
    CHECK(points == 1);  // the grid hits S = n r^(2m) exactly once, at i = 20
    CHECK(circles > 0);
    CHECK(empties + points + circles == 61);
  }
}

TEST_CASE("circle results satisfy the defining sum equation") {
  testutil::Rng rng(0x5eed0303);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform_int(3, 12);
    const int m = rng.uniform_int(1, n - 1);
    const double r = rng.uniform(0.5, 2.0);
    const double ell = rng.uniform(0.2, 4.0);
    const PowerSumSpec spec(n, m);
    const double target = power_sum_closed(spec, r, ell);
    const auto result = classify_power_locus(spec, r, target);
    REQUIRE(result.kind == LocusKind::Circle);
    RegularPolygon poly(n, r);
    for (int i = 0; i < 16; ++i) {
      const double theta = 2.0 * kPi * i / 16.0;
      const double sum =
          power_sum_direct(poly, ProbePoint(result.circle_radius, theta), m);
      REQUIRE(testutil::rel_err(sum, target) <= 1e-9);
    }
  }
}

TEST_CASE("weighted classifier input validation") {
  CHECK_THROWS_AS(classify_weighted_locus({{}, {}, 1.0}), DomainError);
  CHECK_THROWS_AS(classify_weighted_locus({{{0, 0}}, {1.0, 2.0}, 1.0}),
                  DomainError);
  CHECK_THROWS_AS(
      classify_weighted_locus({{{std::nan(""), 0}}, {1.0}, 1.0}),
      DomainError);
}

TEST_CASE("weighted classifier spot cases") {
  SECTION("two unit weights give a circle") {
    const auto result =
        classify_weighted_locus({{{0, 0}, {2, 0}}, {1.0, 1.0}, 4.0});
    REQUIRE(result.kind == LocusKind::Circle);
    CHECK_THAT(result.circle_center.x, WithinAbs(1.0, 1e-14));
    CHECK_THAT(result.circle_center.y, WithinAbs(0.0, 1e-14));
    CHECK_THAT(result.circle_radius, WithinRel(1.0, 1e-14));
  }
  SECTION("opposite weights give a line") {
    const auto result =
        classify_weighted_locus({{{0, 0}, {2, 0}}, {1.0, -1.0}, 0.0});
    REQUIRE(result.kind == LocusKind::Line);
    const auto& [a, b, c] = result.line_coeffs;
    CHECK((a != 0.0 || b != 0.0));
    // proportional to x - 1 = 0
    CHECK_THAT(b, WithinAbs(0.0, 1e-14));
    CHECK_THAT(c / a, WithinAbs(-1.0, 1e-14));
  }
  SECTION("negative target with a single positive weight is empty") {
    CHECK(classify_weighted_locus({{{0, 0}}, {1.0}, -1.0}).kind ==
          LocusKind::Empty);
  }
  SECTION("cancelling points and zero target cover the whole plane") {
    CHECK(classify_weighted_locus({{{1, 2}, {1, 2}}, {1.0, -1.0}, 0.0}).kind ==
          LocusKind::WholePlane);
    CHECK(classify_weighted_locus({{{1, 2}, {1, 2}}, {1.0, -1.0}, 5.0}).kind ==
          LocusKind::Empty);
  }
  SECTION("point case when the target sits at the minimum") {
    // single point, unit weight: S = 0 forces X = P
    const auto result = classify_weighted_locus({{{3, -2}}, {1.0}, 0.0});
    REQUIRE(result.kind == LocusKind::Point);
    CHECK_THAT(result.circle_center.x, WithinAbs(3.0, 1e-14));
    CHECK_THAT(result.circle_center.y, WithinAbs(-2.0, 1e-14));
  }
}

TEST_CASE("unit weights on polygon vertices match the power classifier") {
  testutil::Rng rng(0x5eed0304);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(3, 12);
    const double r = rng.uniform(0.5, 3.0);
    const double ell = rng.uniform(0.1, 4.0);
    RegularPolygon poly(n, r);
    const double target = power_sum_closed(PowerSumSpec(n, 1), r, ell);

    WeightedPointSet wps;
    for (int k = 1; k <= n; ++k) {
      wps.points.push_back(vertex_position(poly, k));
      wps.weights.push_back(1.0);
    }
    wps.target = target;

    const auto result = classify_weighted_locus(wps);
    REQUIRE(result.kind == LocusKind::Circle);
    const double expected = std::sqrt(target / n - r * r);
    CHECK(testutil::rel_err(result.circle_radius, expected) <= 1e-10);
    CHECK_THAT(result.circle_center.x, WithinAbs(0.0, 1e-12 * r));
    CHECK_THAT(result.circle_center.y, WithinAbs(0.0, 1e-12 * r));
  }
}

TEST_CASE("random weighted circles carry a membership witness") {
  testutil::Rng rng(0x5eed0305);
  for (int trial = 0; trial < 50; ++trial) {
    const int count = rng.uniform_int(1, 8);
    WeightedPointSet wps;
    double lambda_sum = 0.0;
    for (int i = 0; i < count; ++i) {
      wps.points.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
      const double w = rng.uniform(0.2, 2.0);
      wps.weights.push_back(w);
      lambda_sum += w;
    }
    // choose the target so the locus is a circle of radius rho around the
    // weighted center of mass
    double sx = 0, sy = 0, sq = 0;
    for (int i = 0; i < count; ++i) {
      sx += wps.weights[i] * wps.points[i].x;
      sy += wps.weights[i] * wps.points[i].y;
      sq += wps.weights[i] *
            (wps.points[i].x * wps.points[i].x +
             wps.points[i].y * wps.points[i].y);
    }
    const double cx = sx / lambda_sum, cy = sy / lambda_sum;
    const double rho = rng.uniform(0.5, 3.0);
    wps.target = lambda_sum * (rho * rho - cx * cx - cy * cy) + sq;

    const auto result = classify_weighted_locus(wps);
    REQUIRE(result.kind == LocusKind::Circle);
    CHECK(testutil::rel_err(result.circle_radius, rho) <= 1e-10);
    for (int i = 0; i < 16; ++i) {
      const double theta = 2.0 * kPi * i / 16.0;
      const PlanarPoint probe{
          result.circle_center.x + result.circle_radius * std::cos(theta),
          result.circle_center.y + result.circle_radius * std::sin(theta)};
      REQUIRE(testutil::rel_err(weighted_square_sum(wps, probe), wps.target) <=
              1e-9);
    }
  }
}

TEST_CASE("random zero-sum weights carry a line membership witness") {
  testutil::Rng rng(0x5eed0306);
  for (int trial = 0; trial < 50; ++trial) {
    const int pairs = rng.uniform_int(1, 4);
    WeightedPointSet wps;
    for (int i = 0; i < pairs; ++i) {
      const double w = rng.uniform(0.2, 2.0);
      wps.points.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
      wps.weights.push_back(w);
      wps.points.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
      wps.weights.push_back(-w);
    }
    wps.target = rng.uniform(-10.0, 10.0);

    const auto result = classify_weighted_locus(wps);
    if (result.kind != LocusKind::Line) continue;  // degenerate draw

    double scale = std::max(1.0, std::abs(wps.target));
    for (std::size_t i = 0; i < wps.points.size(); ++i) {
      scale = std::max(scale,
                       std::abs(wps.weights[i]) *
                           (wps.points[i].x * wps.points[i].x +
                            wps.points[i].y * wps.points[i].y));
    }
    for (double t : {-2.0, 0.5, 3.0}) {
      const PlanarPoint probe = on_line(result, t);
      REQUIRE(std::abs(weighted_square_sum(wps, probe) - wps.target) <=
              1e-9 * scale);
    }
  }
}
