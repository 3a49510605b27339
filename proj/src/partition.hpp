#pragma once

#include <array>
#include <vector>

#include "gh.hpp"

namespace ghlab {

/// A labeling of a space X by the points of a reference space M: labels[x]
/// is the M-point whose block contains x. Blocks are disjoint, nonempty,
/// and cover X by construction.
struct Partition {
  int n_labels = 0;              // |M|
  std::vector<int> labels;       // per point of X, in [0, n_labels)

  std::vector<std::vector<int>> blocks() const;
};

/// Blocks R(i) of a correspondence between M and X, checked to be disjoint,
/// nonempty and covering (which they are for optimal correspondences under
/// the canonical-partition preconditions).
Partition partition_from_correspondence(const Correspondence& r_mx);

/// The canonical partition of X with respect to a general-position M:
/// blocks are the images R(i) of an optimal correspondence.
/// Preconditions, each reported distinctly on violation:
///  - M in general position;
///  - 0 < eps <= s(M)/2;
///  - 2 d_GH(M, X) < eps.
Partition canonical_partition(const FiniteMetricSpace& m,
                              const FiniteMetricSpace& x, double eps);

struct PartitionReport {
  double eps = 0.0;

  // Property 1: diam X_i < eps.
  bool diam_ok = false;
  double diam_worst = 0.0;  // largest block diameter
  std::array<int, 2> diam_witness{-1, -1};

  // Property 2: | |xx'| - |ij| | < eps for x in X_i, x' in X_j.
  bool discrepancy_ok = false;
  double discrepancy_worst = 0.0;
  std::array<int, 2> discrepancy_witness{-1, -1};

  double worst_margin = 0.0;  // eps minus the larger of the two worsts

  bool pass() const { return diam_ok && discrepancy_ok; }
};

/// Checks both canonical-partition properties against an arbitrary labeling
/// that covers X; failures are carried in the report, not thrown.
PartitionReport verify_partition(const FiniteMetricSpace& m,
                                 const FiniteMetricSpace& x, double eps,
                                 const Partition& p);

struct SplitCorrespondence {
  /// Blockwise pieces, indexed by M-label; pairs keep the global X/Y
  /// indices of the parent correspondence. Each piece is verified to be a
  /// correspondence between its blocks X_i and Y_i (in block coordinates it
  /// would be surjective both ways).
  std::vector<Relation> blocks;
};

/// Splits an optimal correspondence R between X and Y along the canonical
/// partitions with respect to M. Throws precondition if the inputs violate
/// the stated bounds, if R is not optimal, or if a pair of R crosses blocks.
/// Preconditions: M general position, n >= 3, e(M) > 0,
/// 0 < eps <= min(s(M), e(M))/4, 2 d_GH(M, X) < eps, 2 d_GH(M, Y) < eps.
SplitCorrespondence split_correspondence(const FiniteMetricSpace& m,
                                         const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y,
                                         double eps, const Correspondence& r);

/// True iff some label bijection carries the blocks of p1 onto the blocks
/// of p2; since labels are distinct per block this is exactly equality of
/// the unlabeled block families.
bool renumbering_equivalence(const Partition& p1, const Partition& p2);

}  // namespace ghlab
