#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "rng.hpp"
#include "test_util.hpp"

using namespace ghlab;
using ghtest::space;

namespace {

// Independent recomputation of s and e straight from the definitions.
double s_oracle(const FiniteMetricSpace& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < x.size(); ++j) {
      if (i != j) best = std::min(best, x.dist(i, j));
    }
  }
  return best;
}

double e_oracle(const FiniteMetricSpace& x) {
  double best = std::numeric_limits<double>::infinity();
  const int n = x.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          if (i == k && j == l) continue;
          best = std::min(best, std::abs(x.dist(i, j) - x.dist(k, l)));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("validate accepts metric matrices") {
  CHECK(FiniteMetricSpace::point().size() == 1);
  CHECK(ghtest::two_points(2.0).dist(0, 1) == 2.0);
  const auto t = ghtest::triangle346();
  CHECK(t.dist(1, 2) == 6.0);
  CHECK(t.dist(2, 1) == 6.0);
}

TEST_CASE("validate rejects non-metrics with a named axiom") {
  CHECK_THROWS_WITH_AS(space({{0, 1}, {2, 0}}),
                       doctest::Contains("symmetry"), Error);
  CHECK_THROWS_WITH_AS(space({{0, 0}, {0, 0}}),
                       doctest::Contains("nonpositive"), Error);
  CHECK_THROWS_WITH_AS(space({{0, 1}, {1, 0.5}}),
                       doctest::Contains("diagonal"), Error);
  CHECK_THROWS_WITH_AS(space({{0, 1, 1}, {1, 0, 3}, {1, 3, 0}}),
                       doctest::Contains("triangle"), Error);
  try {
    space({{0, 1, 1}, {1, 0, 3}, {1, 3, 0}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_metric);
  }
}

TEST_CASE("validate tolerance relaxes the triangle inequality only") {
  CHECK_NOTHROW(space({{0, 1, 1}, {1, 0, 2.5}, {1, 2.5, 0}}, 0.5));
  CHECK_THROWS_AS(space({{0, 1, 1}, {1, 0, 2.6}, {1, 2.6, 0}}, 0.5), Error);
}

TEST_CASE("diagnostics on a known triangle") {
  const auto t = ghtest::triangle346();
  CHECK(diam(t) == 6.0);
  CHECK(s_value(t) == 3.0);
  CHECK(e_value(t) == 1.0);
  CHECK(is_general_position(t));
  CHECK(gh_to_point(t) == 3.0);
}

TEST_CASE("degenerate diagnostics use the empty-infimum convention") {
  const auto p = FiniteMetricSpace::point();
  CHECK(diam(p) == 0.0);
  CHECK(std::isinf(s_value(p)));
  CHECK(std::isinf(e_value(p)));
  const auto two = ghtest::two_points(1.5);
  CHECK(s_value(two) == 1.5);
  CHECK(std::isinf(e_value(two)));
  CHECK(is_general_position(two));
}

TEST_CASE("equilateral triangles are not in general position") {
  CHECK_FALSE(is_general_position(space({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})));
}

TEST_CASE("s and e match the definitional oracle on random spaces") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_general_position(n, 1000 * n + seed, 5.0, 0.001);
      CHECK(s_value(x) == s_oracle(x));
      CHECK(e_value(x) == e_oracle(x));
    }
  }
}

TEST_CASE("random_general_position is deterministic and well separated") {
  const auto a = random_general_position(6, 42, 2.0, 0.01);
  const auto b = random_general_position(6, 42, 2.0, 0.01);
  CHECK(a == b);
  CHECK(is_general_position(a));
  CHECK(s_value(a) >= 0.02);
  CHECK(e_value(a) >= 0.02);
  const auto c = random_general_position(6, 43, 2.0, 0.01);
  CHECK_FALSE(a == c);
}

TEST_CASE("random_general_position rejects impossible separation") {
  CHECK_THROWS_AS(random_general_position(8, 1, 1.0, 0.4, 5), Error);
}

TEST_CASE("scale_space multiplies every distance") {
  const auto t = scale_space(ghtest::triangle346(), 0.5);
  CHECK(t.dist(0, 1) == 1.5);
  CHECK(t.dist(1, 2) == 3.0);
}

TEST_CASE("rng doubles stay in [0,1) and are reproducible") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
  }
  Rng c(7);
  for (int i = 0; i < 50; ++i) {
    const int v = c.uniform_int(3, 9);
    CHECK(v >= 3);
    CHECK(v <= 9);
  }
}
