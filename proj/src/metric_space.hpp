#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"

namespace ghlab {

/// A finite metric space: points are indices 0..n-1, distances a symmetric
/// n x n matrix. Immutable after construction; construction goes through
/// validate() so every instance satisfies the metric axioms.
class FiniteMetricSpace {
 public:
  /// Checks the metric axioms and returns the space. The triangle inequality
  /// is checked as d[i][k] <= d[i][j] + d[j][k] + tol. Throws Error with
  /// code not_metric naming the first violated axiom and the witnessing
  /// indices.
  static FiniteMetricSpace validate(const std::vector<std::vector<double>>& m,
                                    double tol = 0.0);
  static FiniteMetricSpace validate_flat(int n, const double* row_major,
                                         double tol = 0.0);

  /// The one-point space.
  static FiniteMetricSpace point();

  int size() const { return n_; }

  double dist(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Row-major n*n matrix.
  const std::vector<double>& matrix() const { return d_; }

  bool operator==(const FiniteMetricSpace&) const = default;

 private:
  FiniteMetricSpace(int n, std::vector<double> d) : n_(n), d_(std::move(d)) {}
  friend FiniteMetricSpace scale_space(const FiniteMetricSpace&, double);

  int n_;
  std::vector<double> d_;  // row-major
};

struct SpaceDiagnostics {
  double diam = 0.0;
  double s = std::numeric_limits<double>::infinity();
  double e = std::numeric_limits<double>::infinity();
  bool general_position = false;
};

/// Largest distance; 0 for the one-point space.
double diam(const FiniteMetricSpace& x);

/// Smallest nonzero distance; +inf for the one-point space (empty infimum).
double s_value(const FiniteMetricSpace& x);

/// Smallest gap between two distinct unordered-pair distances; +inf when
/// fewer than two pairs exist (n <= 2).
double e_value(const FiniteMetricSpace& x);

/// True iff all nonzero distances are pairwise distinct and every triangle
/// inequality is strict.
bool is_general_position(const FiniteMetricSpace& x);

SpaceDiagnostics diagnostics(const FiniteMetricSpace& x);

/// Distance to the one-point space: diam(x) / 2.
double gh_to_point(const FiniteMetricSpace& x);

/// Deterministic-in-seed general-position space with s >= min_sep*scale and
/// e >= min_sep*scale. Entries are drawn in [0.51, 0.99]*scale so every
/// triangle inequality holds with slack at least 0.03*scale; candidates are
/// rejected until the separation targets hold. Throws generation_failed
/// after max_retries rejections.
FiniteMetricSpace random_general_position(int n, std::uint64_t seed,
                                          double scale, double min_sep,
                                          int max_retries = 1000);

/// Multiplies every distance by factor > 0. Used by the harness to place
/// instances on a ball boundary; the caller re-validates if it needs
/// certainty under rounding.
FiniteMetricSpace scale_space(const FiniteMetricSpace& x, double factor);

}  // namespace ghlab
