#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "geodesic.hpp"
#include "partition.hpp"
#include "rng.hpp"
#include "theorem2.hpp"

namespace ghlab {

inline constexpr const char* kVersion = "0.1.0";

struct TheoremReport {
  std::string theorem;
  nlohmann::json params;

  struct Sample {
    double t = 0.0;
    double value = 0.0;
    double bound = 0.0;
    // Theorem-3 proof bound distortion(R')/2; NaN where not applicable.
    double analytic = std::numeric_limits<double>::quiet_NaN();
  };
  std::vector<Sample> samples;

  bool pass = false;
  double worst_margin = 0.0;  // min over samples of bound - value
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

/// Weak convexity of the ball B_r around the one-point space: builds the
/// geodesic between X and Y and checks, at every grid t, that
/// diam(R_t) <= max(diam X, diam Y) (exact comparison) and diam(R_t)/2 <= r.
/// Requires diam X <= 2r and diam Y <= 2r.
TheoremReport verify_theorem1(const FiniteMetricSpace& x,
                              const FiniteMetricSpace& y, double r,
                              int t_grid);

/// Strong-convexity counterexample: wraps the counterexample report and
/// passes iff diam(C_{r/2}) = 3r exactly, the Hausdorff additivity along
/// the grid is exact, and the violation 3r/2 > r is witnessed. Exact
/// equalities hold when r is a dyadic rational (the tested radii are).
TheoremReport verify_theorem2(double r, int grid);

/// Weak convexity of the small ball around a general-position center M with
/// r = min(s(M), e(M))/4: splits an optimal correspondence along canonical
/// partitions, forms the proof correspondence R' between M and R_t, and
/// checks both distortion(R')/2 <= r and gh_exact(M, R_t) <= r at every
/// grid t, with the analytic bound dominating the exact value.
TheoremReport verify_theorem3(const FiniteMetricSpace& m,
                              const FiniteMetricSpace& x,
                              const FiniteMetricSpace& y, int t_grid);

struct CampaignSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<int> sizes;
  int runs = 0;
  int passes = 0;
  double worst_margin_thm1 = std::numeric_limits<double>::infinity();
  double worst_margin_thm3 = std::numeric_limits<double>::infinity();
  bool thm2_pass = false;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// Deterministic-in-seed batch: per trial and size, generates instances and
/// runs all three verifications. All trials must pass.
CampaignSummary campaign(std::uint64_t seed, int trials,
                         const std::vector<int>& sizes);

/// A space close to M: per-entry noise below max_disc (and optionally one
/// point split into a nearby twin), so that some explicit correspondence has
/// distortion < max_disc and hence d_GH(M, X) < max_disc / 2. Retries with
/// shrinking noise until the result is a valid metric.
FiniteMetricSpace perturb_space(const FiniteMetricSpace& m, Rng& rng,
                                double max_disc, bool allow_split);

}  // namespace ghlab
