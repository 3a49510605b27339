#pragma once

#include <span>
#include <vector>

#include "gh.hpp"

namespace ghlab {

/// Linear interpolation between distances, arranged so the result never
/// exceeds max(a, b) under rounding for interior t.
inline double interp_dist(double a, double b, double t) {
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return a <= b ? a + t * (b - a) : b + (1.0 - t) * (a - b);
}

/// The shortest curve R_t induced by an optimal correspondence: R_0 = X,
/// R_1 = Y, and for interior t the point set is the pair set of the
/// correspondence with distance (1-t)|xx'| + t|yy'|.
class GeodesicCurve {
 public:
  /// Solves for an optimal correspondence and builds the curve.
  static GeodesicCurve make(const FiniteMetricSpace& x,
                            const FiniteMetricSpace& y,
                            const GHOptions& options = {});

  /// Builds from a known witness; checks distortion(r)/2 == gh.
  static GeodesicCurve from_witness(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y,
                                    const Correspondence& r, double gh);

  const FiniteMetricSpace& x() const { return x_; }
  const FiniteMetricSpace& y() const { return y_; }
  const Correspondence& witness() const { return r_; }
  double gh() const { return gh_; }

  /// Evaluates the curve. Endpoints return X and Y verbatim (at t in {0,1}
  /// the pair-set distance is only a pseudometric); interior t returns the
  /// pair-set space, whose distances are positive for distinct pairs.
  FiniteMetricSpace at(double t) const;

  /// diam of at(t).
  double interior_diam(double t) const;

  /// Sum of exact distances over consecutive grid spaces. The grid must be
  /// 0 = t_0 < ... < t_k = 1. Equals gh() for every grid, up to rounding.
  double polyline_length(std::span<const double> grid) const;

 private:
  GeodesicCurve(FiniteMetricSpace x, FiniteMetricSpace y, Correspondence r,
                double gh)
      : x_(std::move(x)), y_(std::move(y)), r_(std::move(r)), gh_(gh) {}

  FiniteMetricSpace x_;
  FiniteMetricSpace y_;
  Correspondence r_;
  double gh_;
};

/// Uniform grid of count points over [0,1]; exact dyadics when count-1 is a
/// power of two (the default 33-point grid is).
std::vector<double> uniform_grid(int count);

/// count strictly increasing dyadic rationals from 0 to 1, approximately
/// uniform. Dyadic grid values keep the interval-union computations exact.
std::vector<double> dyadic_grid(int count);

}  // namespace ghlab
