#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "metric_space.hpp"

namespace ghlab {

/// A nonempty relation between index sets {0..nx-1} and {0..ny-1}. Pairs are
/// kept sorted lexicographically and unique.
struct Relation {
  int nx = 0;
  int ny = 0;
  std::vector<std::pair<int, int>> pairs;

  static Relation from_pairs(int nx, int ny,
                             std::vector<std::pair<int, int>> pairs);

  bool surjective_x() const;
  bool surjective_y() const;
};

/// A relation whose projections onto both sides are surjective.
struct Correspondence : Relation {
  static Correspondence from_pairs(int nx, int ny,
                                   std::vector<std::pair<int, int>> pairs);

  /// {(i, i)} on an n-point side pair.
  static Correspondence identity(int n);

  /// Everything related to everything.
  static Correspondence full(int nx, int ny);

  Correspondence transposed() const;
};

/// Max over pairs of related pairs of the distance discrepancy
/// | |x x'| - |y y'| |. Zero for a single-pair relation.
double distortion(const Relation& sigma, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y);

/// Visits every correspondence between nx and ny points exactly once, in
/// increasing order of the pair-subset bitmask (pair (i,j) is bit i*ny+j).
/// Requires nx*ny <= budget (default 20). The visitor returns false to stop
/// early. Returns the number of correspondences visited.
std::uint64_t enumerate_correspondences(
    int nx, int ny, const std::function<bool(const Correspondence&)>& visit,
    int budget = 20);

std::vector<Correspondence> all_correspondences(int nx, int ny,
                                                int budget = 20);

}  // namespace ghlab
