// Acceptance gate: one check per release criterion, each printing a single
// [PASS]/[FAIL] line with its runtime. Tolerances are pinned here on purpose
// so a regression cannot hide behind a config change.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "harness.hpp"

using namespace ghlab;

namespace {

int g_failures = 0;

void run(int index, const std::string& name, double time_limit_s,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!ok) ++g_failures;
  std::printf("[%s] %d %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
              index, name.c_str(), elapsed, time_limit_s,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

// 1. d_GH(X, one-point) == diam(X)/2 exactly for 200 random spaces, n <= 8.
bool crit_half_diameter(std::string& detail) {
  const FiniteMetricSpace point = FiniteMetricSpace::point();
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 8;
    const auto x = random_general_position(std::max(n, 1), 10'000 + i,
                                           1.0 + i % 5, 0.001);
    if (gh_exact(x, point).distance != diam(x) / 2.0) {
      detail = "mismatch at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 2. Solver equals the brute-force oracle on 100 random pairs, sides <= 4.
bool crit_oracle(std::string& detail) {
  for (int i = 0; i < 100; ++i) {
    const int nx = 1 + i % 4;
    const int ny = 1 + (i / 4) % 4;
    const auto x = random_general_position(nx, 20'000 + i, 2.0, 0.001);
    const auto y = random_general_position(ny, 21'000 + i, 3.0, 0.001);
    const double fast = gh_exact(x, y).distance;
    const double slow = gh_exact_bruteforce(x, y).distance;
    if (std::abs(fast - slow) > 1e-12) {
      detail = "pair " + std::to_string(i) + ": " + std::to_string(fast) +
               " vs " + std::to_string(slow);
      return false;
    }
  }
  return true;
}

// 3. The strong-convexity counterexample reproduces its exact numbers.
bool crit_counterexample(std::string& detail) {
  const CounterexampleReport rep = theorem2_report(1.0, 11);
  const bool ok = rep.dh_ab == 1.0 && rep.diam_mid == 3.0 &&
                  rep.gh_mid_to_point == 1.5 &&
                  rep.gh_mid_discretized == 1.5 &&
                  rep.additivity_sum == 1.0 && rep.violation_margin == 0.5;
  if (!ok) detail = rep.to_json().dump();
  return ok;
}

// 4. Geodesic linearity: d_GH(R_a, R_b) == |b - a| * d_GH(X, Y) to 1e-9
//    over 50 random pairs with n <= 5.
bool crit_linearity(std::string& detail) {
  const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 50; ++i) {
    const auto x =
        random_general_position(2 + i % 4, 30'000 + i, 1.0, 0.001);
    const auto y =
        random_general_position(2 + (i / 4) % 4, 31'000 + i, 2.0, 0.001);
    const GeodesicCurve curve = GeodesicCurve::make(x, y);
    for (const double a : ts) {
      for (const double b : ts) {
        if (b <= a) continue;
        const double got = gh_exact(curve.at(a), curve.at(b)).distance;
        if (std::abs(got - (b - a) * curve.gh()) > 1e-9) {
          detail = "pair " + std::to_string(i) + " at [" +
                   std::to_string(a) + "," + std::to_string(b) + "]";
          return false;
        }
      }
    }
  }
  return true;
}

// 5. Theorem 1 on 100 random pairs at 33 grid points, exact comparisons.
bool crit_theorem1(std::string& detail) {
  for (int i = 0; i < 100; ++i) {
    const auto x =
        random_general_position(2 + i % 5, 40'000 + i, 1.0, 0.002);
    const auto y =
        random_general_position(2 + (i / 5) % 5, 41'000 + i, 1.0, 0.002);
    const double r = std::max(diam(x), diam(y)) / 2.0;
    const TheoremReport rep = verify_theorem1(x, y, r, 33);
    if (!rep.pass) {
      detail = "instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 6. Theorem 3 on 50 perturbed instances with centers of size 3..5, both
//    the exact value and the analytic bound under the radius, the bound
//    dominating the value.
bool crit_theorem3(std::string& detail) {
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + i % 3;
    const auto m = random_general_position(n, 50'000 + i, 10.0, 0.01);
    const double r = std::min(s_value(m), e_value(m)) / 4.0;
    Rng rng(60'000 + i);
    const auto x = perturb_space(m, rng, r, i % 2 == 0);
    const auto y = perturb_space(m, rng, r, i % 2 == 1);
    const TheoremReport rep = verify_theorem3(m, x, y, 33);
    if (!rep.pass) {
      detail = "instance " + std::to_string(i);
      return false;
    }
    for (const auto& s : rep.samples) {
      if (s.value > s.analytic || s.analytic > r) {
        detail = "bound ordering broke at instance " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

// 7. Canonical-partition uniqueness: on 30 instances, every optimal
//    correspondence induces the same unlabeled partition.
bool crit_uniqueness(std::string& detail) {
  for (int i = 0; i < 30; ++i) {
    const auto m = random_general_position(3, 70'000 + i, 10.0, 0.02);
    const double eps = std::min(s_value(m), e_value(m)) / 4.0;
    Rng rng(71'000 + i);
    const auto x = perturb_space(m, rng, eps, i % 2 == 0);
    const Partition reference = canonical_partition(m, x, eps);
    const double target = distortion(gh_exact(m, x).witness, m, x);
    bool ok = true;
    enumerate_correspondences(
        m.size(), x.size(), [&](const Correspondence& c) {
          if (distortion(c, m, x) == target &&
              !renumbering_equivalence(reference,
                                       partition_from_correspondence(c))) {
            ok = false;
            return false;
          }
          return true;
        });
    if (!ok) {
      detail = "instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 8. Metric axioms: zero-tolerance validation of everything the library
//    produces, plus the Hausdorff triangle inequality on 1000 random
//    interval-union triples.
bool crit_axioms(std::string& detail) {
  for (int i = 0; i < 50; ++i) {
    const auto x = random_general_position(2 + i % 7, 80'000 + i, 4.0, 0.001);
    try {
      FiniteMetricSpace::validate_flat(x.size(), x.matrix().data(), 0.0);
    } catch (const Error&) {
      detail = "generated space failed validation at " + std::to_string(i);
      return false;
    }
  }
  Rng rng(81'000);
  auto random_union = [&rng]() {
    std::vector<Interval> ivs;
    const int k = rng.uniform_int(1, 3);
    for (int j = 0; j < k; ++j) {
      const double a = rng.uniform_int(0, 512) / 128.0;
      const double b = a + rng.uniform_int(0, 256) / 128.0;
      ivs.push_back({a, b});
    }
    return IntervalUnion::from_intervals(std::move(ivs));
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_union();
    const auto b = random_union();
    const auto c = random_union();
    const double ab = hausdorff_distance(a, b);
    const double bc = hausdorff_distance(b, c);
    const double ac = hausdorff_distance(a, c);
    if (ac > ab + bc + 1e-12 ||
        ab != hausdorff_distance(b, a) ||
        (ab == 0.0) != (a == b)) {
      detail = "triple " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 9. Performance: exact 7x7 solves, median over 10 instances under 60 s.
bool crit_performance(std::string& detail) {
  std::vector<double> times;
  for (int i = 0; i < 10; ++i) {
    const auto x = random_general_position(7, 90'000 + i, 1.0, 0.001);
    const auto y = random_general_position(7, 91'000 + i, 2.0, 0.001);
    const auto start = std::chrono::steady_clock::now();
    const GHResult r = gh_exact(x, y);
    times.push_back(std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count());
    if (!r.exact) {
      detail = "instance " + std::to_string(i) + " was not exact";
      return false;
    }
  }
  std::sort(times.begin(), times.end());
  const double median = (times[4] + times[5]) / 2.0;
  detail = "median " + std::to_string(median) + "s";
  return median < 60.0;
}

}  // namespace

int main() {
  run(1, "half-diameter exactness", 10.0, crit_half_diameter);
  run(2, "solver matches brute force", 60.0, crit_oracle);
  run(3, "counterexample exact numbers", 5.0, crit_counterexample);
  run(4, "geodesic linearity", 120.0, crit_linearity);
  run(5, "ball around the one-point space", 600.0, crit_theorem1);
  run(6, "small balls around general-position centers", 600.0, crit_theorem3);
  run(7, "partition uniqueness", 600.0, crit_uniqueness);
  run(8, "metric axioms", 600.0, crit_axioms);
  run(9, "7x7 performance", 600.0, crit_performance);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
