#include "theorem2.hpp"

#include "geodesic.hpp"
#include "gh.hpp"

namespace ghlab {

CounterexampleReport theorem2_report(double r, int grid) {
  if (!(r > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "r must be > 0");
  }
  if (grid < 2) {
    throw Error(ErrorCode::invalid_argument, "grid needs at least 2 points");
  }
  const IntervalUnion a = IntervalUnion::segment(0.0, 2.0 * r);
  const IntervalUnion b = IntervalUnion::from_intervals(
      {{0.0, 0.0}, {2.0 * r, 2.0 * r}});

  CounterexampleReport out;
  out.r = r;
  out.dh_ab = hausdorff_distance(a, b);
  out.gh_ab_upper = out.dh_ab;  // subsets of a common space: d_GH <= d_H

  // Lower bounds: d_GH(A, B) >= d_GH(A_h, B) - d_GH(A, A_h)
  //                          >= (r - h/2) - h/2 = r - h.
  const FiniteMetricSpace b_space =
      FiniteMetricSpace::validate({{0.0, 2.0 * r}, {2.0 * r, 0.0}});
  for (const double h : {r / 2.0, r / 4.0, r / 8.0}) {
    const FiniteMetricSpace a_h = a.discretize(h);
    const double gh_h = gh_exact(a_h, b_space).distance;
    out.gh_ab_lower_bounds.emplace_back(h, gh_h - h / 2.0);
  }

  std::vector<IntervalUnion> c_grid;
  for (const double q : dyadic_grid(grid)) {
    const double s = q * r;
    IntervalUnion c = c_s(a, b, s);
    CounterexampleReport::Sample sample;
    sample.s = s;
    sample.dh_to_a = hausdorff_distance(c, a);
    sample.dh_to_b = hausdorff_distance(c, b);
    sample.diam = c.diameter();
    out.samples.push_back(sample);
    c_grid.push_back(std::move(c));
  }
  out.additivity_sum = 0.0;
  for (std::size_t i = 1; i < c_grid.size(); ++i) {
    out.additivity_sum += hausdorff_distance(c_grid[i - 1], c_grid[i]);
  }

  out.c_mid = c_s(a, b, 0.5 * r);
  out.diam_mid = out.c_mid.diameter();
  out.gh_mid_to_point = out.diam_mid / 2.0;
  out.gh_mid_discretized =
      gh_exact(out.c_mid.discretize(0.5 * r), FiniteMetricSpace::point())
          .distance;
  out.violation_margin = out.gh_mid_to_point - r;
  return out;
}

nlohmann::json CounterexampleReport::to_json() const {
  nlohmann::json j;
  j["r"] = r;
  j["dh_ab"] = dh_ab;
  j["gh_ab_upper"] = gh_ab_upper;
  auto& lbs = j["gh_ab_lower_bounds"] = nlohmann::json::array();
  for (const auto& [step, bound] : gh_ab_lower_bounds) {
    lbs.push_back({{"step", step}, {"lower", bound}});
  }
  auto& ss = j["samples"] = nlohmann::json::array();
  for (const auto& s : samples) {
    ss.push_back({{"s", s.s},
                  {"dh_to_a", s.dh_to_a},
                  {"dh_to_b", s.dh_to_b},
                  {"diam", s.diam}});
  }
  j["additivity_sum"] = additivity_sum;
  auto& mid = j["c_mid"] = nlohmann::json::array();
  for (const auto& [lo, hi] : c_mid.intervals()) {
    mid.push_back({lo, hi});
  }
  j["diam_mid"] = diam_mid;
  j["gh_mid_to_point"] = gh_mid_to_point;
  j["gh_mid_discretized"] = gh_mid_discretized;
  j["violation_margin"] = violation_margin;
  return j;
}

}  // namespace ghlab
