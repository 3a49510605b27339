#pragma once

#include <cstdint>

#include "correspondence.hpp"
#include "metric_space.hpp"

namespace ghlab {

struct GHResult {
  /// Exact Gromov-Hausdorff distance when exact is true; otherwise the best
  /// certified upper bound (witness achieves 2*upper).
  double distance = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool exact = true;
  Correspondence witness;
  std::uint64_t node_count = 0;
};

struct GHOptions {
  /// 0 means unlimited. When the budget runs out, the solver stops and
  /// returns a certified interval [lower, upper] with exact = false.
  std::uint64_t node_budget = 0;
};

/// Minimizes distortion over every correspondence (brute-force enumeration,
/// nx*ny <= budget bits). The witness is the lexicographically first
/// minimizer in enumeration order.
GHResult gh_exact_bruteforce(const FiniteMetricSpace& x,
                             const FiniteMetricSpace& y, int budget = 20);

/// Exact distance by branch-and-bound over function pairs f: X->Y,
/// g: Y->X. Any correspondence contains a function-pair-generated
/// sub-correspondence of no larger distortion, so the minimum over the
/// reduced space equals the minimum over all correspondences. Deterministic:
/// the same inputs always yield the same witness.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const GHOptions& options = {});

/// |diam X - diam Y| / 2. Never exceeds the exact distance; tight against
/// the one-point space.
double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace ghlab
