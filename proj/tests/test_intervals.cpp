#include <cmath>

#include "doctest.h"
#include "rng.hpp"
#include "theorem2.hpp"

using namespace ghlab;

namespace {

// Sampling approximation of the directed deviation on a fine grid; used as
// an independent cross-check of the exact candidate-based computation.
double directed_sampled(const IntervalUnion& from, const IntervalUnion& to,
                        double step) {
  double worst = 0.0;
  for (const auto& iv : from.intervals()) {
    for (double x = iv.lo;; x += step) {
      const double p = std::min(x, iv.hi);
      worst = std::max(worst, to.distance_to(p));
      if (p == iv.hi) break;
    }
  }
  return worst;
}

IntervalUnion random_union(Rng& rng, int max_intervals) {
  std::vector<Interval> ivs;
  const int k = rng.uniform_int(1, max_intervals);
  for (int i = 0; i < k; ++i) {
    // Dyadic endpoints keep every computation exact.
    const double a = rng.uniform_int(0, 512) / 256.0;
    const double b = a + rng.uniform_int(0, 128) / 256.0;
    ivs.push_back({a, b});
  }
  return IntervalUnion::from_intervals(std::move(ivs));
}

}  // namespace

TEST_CASE("normalization sorts and merges touching intervals") {
  const auto u = IntervalUnion::from_intervals({{2, 3}, {0, 1}, {1, 1.5}});
  REQUIRE(u.intervals().size() == 2);
  CHECK(u.intervals()[0] == Interval{0, 1.5});
  CHECK(u.intervals()[1] == Interval{2, 3});
  CHECK(u.min() == 0.0);
  CHECK(u.max() == 3.0);
  CHECK(u.diameter() == 3.0);
  CHECK_THROWS_AS(IntervalUnion::from_intervals({{1, 0}}), Error);
}

TEST_CASE("distance_to and containment") {
  const auto u = IntervalUnion::from_intervals({{0, 1}, {3, 4}});
  CHECK(u.distance_to(0.5) == 0.0);
  CHECK(u.distance_to(2.0) == 1.0);
  CHECK(u.distance_to(2.6) == doctest::Approx(0.4));
  CHECK(u.distance_to(-2.0) == 2.0);
  CHECK(u.distance_to(5.0) == 1.0);
  CHECK(u.contains(3.0));
  CHECK_FALSE(u.contains(2.0));
  CHECK(u.contains_set(IntervalUnion::segment(3.2, 3.8)));
  CHECK_FALSE(u.contains_set(IntervalUnion::segment(0.5, 3.5)));
}

TEST_CASE("neighborhood merges grown intervals") {
  const auto u = IntervalUnion::from_intervals({{0, 0}, {2, 2}});
  const auto n = u.neighborhood(1.0);
  REQUIRE(n.intervals().size() == 1);
  CHECK(n.intervals()[0] == Interval{-1.0, 3.0});
  const auto half = u.neighborhood(0.5);
  CHECK(half.intervals().size() == 2);
  CHECK_THROWS_AS(u.neighborhood(-0.1), Error);
}

TEST_CASE("intersection") {
  const auto a = IntervalUnion::from_intervals({{0, 2}, {4, 6}});
  const auto b = IntervalUnion::segment(1, 5);
  const auto c = a.intersect(b);
  REQUIRE(c.has_value());
  CHECK(c->intervals() == std::vector<Interval>{{1, 2}, {4, 5}});
  CHECK_FALSE(a.intersect(IntervalUnion::point(3.0)).has_value());
}

TEST_CASE("hausdorff distance on known pairs") {
  CHECK(hausdorff_distance(IntervalUnion::segment(0, 1),
                           IntervalUnion::segment(2, 3)) == 2.0);
  // Segment versus its endpoint pair: the midpoint is the farthest point.
  const auto seg = IntervalUnion::segment(0, 2);
  const auto ends = IntervalUnion::from_intervals({{0, 0}, {2, 2}});
  CHECK(hausdorff_distance(seg, ends) == 1.0);
  CHECK(directed_deviation(seg, ends) == 1.0);
  CHECK(directed_deviation(ends, seg) == 0.0);
  CHECK(hausdorff_distance(seg, seg) == 0.0);
}

TEST_CASE("hausdorff distance matches dense sampling") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_union(rng, 3);
    const auto b = random_union(rng, 3);
    const double exact = hausdorff_distance(a, b);
    const double step = 1.0 / 4096.0;
    const double sampled =
        std::max(directed_sampled(a, b, step), directed_sampled(b, a, step));
    CHECK(sampled <= exact);
    CHECK(exact - sampled <= step);
  }
}

TEST_CASE("c_s interpolates between the endpoints") {
  const auto a = IntervalUnion::segment(0, 2);
  const auto b = IntervalUnion::from_intervals({{0, 0}, {2, 2}});
  const double r = hausdorff_distance(a, b);
  REQUIRE(r == 1.0);
  CHECK(c_s(a, b, 0.0) == a);
  CHECK(c_s(a, b, r) == b);
  const auto mid = c_s(a, b, 0.5);
  CHECK(mid.intervals() ==
        std::vector<Interval>{{-0.5, 0.5}, {1.5, 2.5}});
  CHECK(mid.diameter() == 3.0);
  CHECK(hausdorff_distance(a, mid) == 0.5);
  CHECK(hausdorff_distance(mid, b) == 0.5);
  CHECK_THROWS_AS(c_s(a, b, 1.5), Error);
  CHECK_THROWS_AS(c_s(a, b, -0.5), Error);
}

TEST_CASE("hausdorff additivity along c_s") {
  const auto a = IntervalUnion::from_intervals({{0, 1}, {2, 4}});
  const auto b = IntervalUnion::from_intervals({{-1, 0.5}, {3, 3.5}});
  const double r = hausdorff_distance(a, b);
  double sum = 0.0;
  IntervalUnion prev = a;
  for (int i = 1; i <= 8; ++i) {
    const auto cur = c_s(a, b, r * i / 8.0);
    sum += hausdorff_distance(prev, cur);
    prev = cur;
  }
  CHECK(sum == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("discretize stays within half a step") {
  const auto u = IntervalUnion::from_intervals({{0, 1}, {2.5, 2.5}});
  const auto grid = u.discretize(0.25);
  // Every grid point lies in the set, every set point is near a grid point.
  CHECK(grid.size() == 6);
  CHECK(grid.dist(0, grid.size() - 1) == 2.5);
  CHECK_THROWS_AS(u.discretize(1e-6, 64), Error);
}

TEST_CASE("counterexample report at r = 1 has the exact numbers") {
  const CounterexampleReport rep = theorem2_report(1.0, 11);
  CHECK(rep.dh_ab == 1.0);
  CHECK(rep.gh_ab_upper == 1.0);
  REQUIRE(rep.gh_ab_lower_bounds.size() == 3);
  CHECK(rep.gh_ab_lower_bounds[0].second == 0.5);
  CHECK(rep.gh_ab_lower_bounds[1].second == 0.75);
  CHECK(rep.gh_ab_lower_bounds[2].second == 0.875);
  CHECK(rep.diam_mid == 3.0);
  CHECK(rep.gh_mid_to_point == 1.5);
  CHECK(rep.gh_mid_discretized == 1.5);
  CHECK(rep.additivity_sum == 1.0);
  CHECK(rep.violation_margin == 0.5);
  for (const auto& s : rep.samples) {
    CHECK(s.dh_to_a == s.s);
    CHECK(s.dh_to_b == 1.0 - s.s);
  }
}

TEST_CASE("counterexample scales linearly with r") {
  const CounterexampleReport rep = theorem2_report(0.25, 5);
  CHECK(rep.dh_ab == 0.25);
  CHECK(rep.diam_mid == 0.75);
  CHECK(rep.gh_mid_to_point == 0.375);
  CHECK(rep.violation_margin == 0.125);
}
