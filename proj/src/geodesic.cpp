#include "geodesic.hpp"

#include <cmath>

namespace ghlab {

GeodesicCurve GeodesicCurve::make(const FiniteMetricSpace& x,
                                  const FiniteMetricSpace& y,
                                  const GHOptions& options) {
  GHResult r = gh_exact(x, y, options);
  if (!r.exact) {
    throw Error(ErrorCode::budget_exceeded,
                "solver node budget exhausted before an optimal "
                "correspondence was certified");
  }
  return GeodesicCurve(x, y, r.witness, r.distance);
}

GeodesicCurve GeodesicCurve::from_witness(const FiniteMetricSpace& x,
                                          const FiniteMetricSpace& y,
                                          const Correspondence& r, double gh) {
  if (r.nx != x.size() || r.ny != y.size()) {
    throw Error(ErrorCode::invalid_argument,
                "correspondence sides do not match the endpoint spaces");
  }
  if (distortion(r, x, y) != 2.0 * gh) {
    throw Error(ErrorCode::invalid_argument,
                "witness distortion does not equal twice the stated distance");
  }
  return GeodesicCurve(x, y, r, gh);
}

FiniteMetricSpace GeodesicCurve::at(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "t must lie in [0, 1]");
  }
  if (t == 0.0) return x_;
  if (t == 1.0) return y_;
  const auto& p = r_.pairs;
  const int k = static_cast<int>(p.size());
  std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double v = interp_dist(x_.dist(p[a].first, p[b].first),
                                   y_.dist(p[a].second, p[b].second), t);
      // Distinct pairs differ in at least one coordinate, so v > 0 for
      // interior t; this guards the no-deduplication assumption.
      if (!(v > 0.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "interior evaluation produced a zero distance between "
                    "distinct pairs");
      }
      m[a][b] = v;
      m[b][a] = v;
    }
  }
  return FiniteMetricSpace::validate(m, 0.0);
}

double GeodesicCurve::interior_diam(double t) const { return diam(at(t)); }

double GeodesicCurve::polyline_length(std::span<const double> grid) const {
  if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != 1.0) {
    throw Error(ErrorCode::invalid_argument,
                "grid must run from 0 to 1 with at least two points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "grid must be strictly increasing");
    }
  }
  double total = 0.0;
  FiniteMetricSpace prev = at(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    FiniteMetricSpace next = at(grid[i]);
    total += gh_exact(prev, next).distance;
    prev = std::move(next);
  }
  return total;
}

std::vector<double> uniform_grid(int count) {
  if (count < 2) {
    throw Error(ErrorCode::invalid_argument, "grid needs at least 2 points");
  }
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = static_cast<double>(i) / (count - 1);
  }
  out.back() = 1.0;
  return out;
}

std::vector<double> dyadic_grid(int count) {
  if (count < 2) {
    throw Error(ErrorCode::invalid_argument, "grid needs at least 2 points");
  }
  // Denominator at least twice the step count, so rounding to the dyadic
  // lattice keeps the sequence strictly increasing.
  std::uint64_t denom = 1;
  while (denom < 2 * static_cast<std::uint64_t>(count - 1)) denom *= 2;
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const auto num = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(i) * static_cast<double>(denom) /
                     (count - 1)));
    out[i] = static_cast<double>(num) / static_cast<double>(denom);
  }
  return out;
}

}  // namespace ghlab
