#include "partition.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ghlab {

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(n_labels);
  for (std::size_t x = 0; x < labels.size(); ++x) {
    out[labels[x]].push_back(static_cast<int>(x));
  }
  return out;
}

Partition partition_from_correspondence(const Correspondence& r_mx) {
  Partition p;
  p.n_labels = r_mx.nx;
  p.labels.assign(r_mx.ny, -1);
  for (const auto& [i, x] : r_mx.pairs) {
    if (p.labels[x] != -1 && p.labels[x] != i) {
      std::ostringstream os;
      os << "blocks overlap: point " << x << " lies in R(" << p.labels[x]
         << ") and R(" << i << ")";
      throw Error(ErrorCode::precondition, os.str());
    }
    p.labels[x] = i;
  }
  // Surjectivity of the correspondence guarantees coverage and nonempty
  // blocks, so nothing further to check.
  return p;
}

namespace {

void check_center(const FiniteMetricSpace& m, double eps, double eps_cap,
                  const char* cap_name) {
  if (!is_general_position(m)) {
    throw Error(ErrorCode::precondition,
                "reference space is not in general position");
  }
  if (!(eps > 0.0 && eps <= eps_cap)) {
    std::ostringstream os;
    os << "eps must satisfy 0 < eps <= " << cap_name << " = " << eps_cap;
    throw Error(ErrorCode::precondition, os.str());
  }
}

void check_proximity(const FiniteMetricSpace& m, const FiniteMetricSpace& x,
                     double eps, const char* which) {
  const double gh = gh_exact(m, x).distance;
  if (!(2.0 * gh < eps)) {
    std::ostringstream os;
    os << which << " is too far from the reference space: 2 d_GH = "
       << 2.0 * gh << " >= eps = " << eps;
    throw Error(ErrorCode::precondition, os.str());
  }
}

}  // namespace

Partition canonical_partition(const FiniteMetricSpace& m,
                              const FiniteMetricSpace& x, double eps) {
  check_center(m, eps, s_value(m) / 2.0, "s(M)/2");
  check_proximity(m, x, eps, "X");
  return partition_from_correspondence(gh_exact(m, x).witness);
}

PartitionReport verify_partition(const FiniteMetricSpace& m,
                                 const FiniteMetricSpace& x, double eps,
                                 const Partition& p) {
  if (static_cast<int>(p.labels.size()) != x.size() ||
      p.n_labels != m.size()) {
    throw Error(ErrorCode::invalid_argument,
                "partition does not match the spaces");
  }
  for (const int l : p.labels) {
    if (l < 0 || l >= p.n_labels) {
      throw Error(ErrorCode::invalid_argument, "label out of range");
    }
  }
  PartitionReport rep;
  rep.eps = eps;
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a; b < x.size(); ++b) {
      const int i = p.labels[a];
      const int j = p.labels[b];
      if (i == j && a != b) {
        const double d = x.dist(a, b);
        if (d > rep.diam_worst) {
          rep.diam_worst = d;
          rep.diam_witness = {a, b};
        }
      }
      const double disc = std::abs(x.dist(a, b) - m.dist(i, j));
      if (disc > rep.discrepancy_worst) {
        rep.discrepancy_worst = disc;
        rep.discrepancy_witness = {a, b};
      }
    }
  }
  rep.diam_ok = rep.diam_worst < eps;
  rep.discrepancy_ok = rep.discrepancy_worst < eps;
  rep.worst_margin = eps - std::max(rep.diam_worst, rep.discrepancy_worst);
  return rep;
}

SplitCorrespondence split_correspondence(const FiniteMetricSpace& m,
                                         const FiniteMetricSpace& x,
                                         const FiniteMetricSpace& y,
                                         double eps, const Correspondence& r) {
  if (m.size() < 3) {
    throw Error(ErrorCode::precondition,
                "reference space needs at least 3 points");
  }
  check_center(m, eps, std::min(s_value(m), e_value(m)) / 4.0,
               "min(s(M), e(M))/4");
  check_proximity(m, x, eps, "X");
  check_proximity(m, y, eps, "Y");
  if (r.nx != x.size() || r.ny != y.size()) {
    throw Error(ErrorCode::invalid_argument,
                "correspondence sides do not match X and Y");
  }
  const double gh_xy = gh_exact(x, y).distance;
  if (distortion(r, x, y) != 2.0 * gh_xy) {
    throw Error(ErrorCode::precondition,
                "correspondence is not optimal for (X, Y)");
  }

  const Partition px = canonical_partition(m, x, eps);
  const Partition py = canonical_partition(m, y, eps);

  std::vector<std::vector<std::pair<int, int>>> grouped(m.size());
  for (const auto& [xi, yj] : r.pairs) {
    if (px.labels[xi] != py.labels[yj]) {
      std::ostringstream os;
      os << "pair (" << xi << "," << yj << ") crosses blocks "
         << px.labels[xi] << " and " << py.labels[yj];
      throw Error(ErrorCode::precondition, os.str());
    }
    grouped[px.labels[xi]].emplace_back(xi, yj);
  }

  SplitCorrespondence out;
  for (int i = 0; i < m.size(); ++i) {
    // Validate each block piece as a correspondence between X_i and Y_i.
    std::set<int> xs, ys;
    for (int a = 0; a < x.size(); ++a) {
      if (px.labels[a] == i) xs.insert(a);
    }
    for (int b = 0; b < y.size(); ++b) {
      if (py.labels[b] == i) ys.insert(b);
    }
    std::set<int> seen_x, seen_y;
    for (const auto& [xi, yj] : grouped[i]) {
      seen_x.insert(xi);
      seen_y.insert(yj);
    }
    if (seen_x != xs || seen_y != ys) {
      throw Error(ErrorCode::precondition,
                  "block piece is not surjective onto its blocks");
    }
    out.blocks.push_back(
        Relation::from_pairs(x.size(), y.size(), std::move(grouped[i])));
  }
  return out;
}

bool renumbering_equivalence(const Partition& p1, const Partition& p2) {
  if (p1.labels.size() != p2.labels.size()) return false;
  auto canonical = [](const Partition& p) {
    auto blocks = p.blocks();
    std::vector<std::vector<int>> nonempty;
    for (auto& b : blocks) {
      if (!b.empty()) nonempty.push_back(std::move(b));
    }
    std::sort(nonempty.begin(), nonempty.end());
    return nonempty;
  };
  return canonical(p1) == canonical(p2);
}

}  // namespace ghlab
