#include "gh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Branch-and-bound over (f: X->Y total, g defined on the Y points f misses).
// State carries the list of committed pairs; the partial distortion of that
// list is a lower bound for every completion below the node.
class Solver {
 public:
  Solver(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
         std::uint64_t node_budget)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), node_budget_(node_budget) {
    xorder_.resize(n_);
    for (int i = 0; i < n_; ++i) xorder_[i] = i;
    std::vector<double> ecc(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) ecc[i] = std::max(ecc[i], x_.dist(i, j));
    }
    std::stable_sort(xorder_.begin(), xorder_.end(),
                     [&](int a, int b) { return ecc[a] > ecc[b]; });
    ycount_.assign(m_, 0);
  }

  GHResult run() {
    // Greedy descent seeds the upper bound and the default witness.
    greedy_ = true;
    best_ = kInf;
    descend_f(0, 0.0);
    greedy_ = false;
    cur_.clear();
    std::fill(ycount_.begin(), ycount_.end(), 0);
    descend_f(0, 0.0);

    GHResult out;
    out.upper = best_ / 2.0;
    out.distance = out.upper;
    out.exact = !aborted_;
    out.lower = aborted_ ? std::max(gh_lower_bound(x_, y_),
                                    std::min(best_, abandoned_lb_) / 2.0)
                         : out.upper;
    out.witness = Correspondence::from_pairs(n_, m_, best_pairs_);
    out.node_count = nodes_;
    return out;
  }

 private:
  double incremental(int xi, int yj) const {
    double worst = 0.0;
    for (const auto& [cx, cy] : cur_) {
      worst = std::max(worst, std::abs(x_.dist(xi, cx) - y_.dist(yj, cy)));
    }
    return worst;
  }

  bool out_of_budget() {
    // The greedy pass always completes so a witness exists even under a
    // tiny budget.
    if (!greedy_ && node_budget_ != 0 && nodes_ >= node_budget_) {
      aborted_ = true;
      return true;
    }
    return false;
  }

  void descend_f(int level, double partial) {
    if (aborted_) {
      abandoned_lb_ = std::min(abandoned_lb_, partial);
      return;
    }
    if (level == n_) {
      uncovered_.clear();
      for (int j = 0; j < m_; ++j) {
        if (ycount_[j] == 0) uncovered_.push_back(j);
      }
      descend_g(0, partial);
      return;
    }
    const int xi = xorder_[level];
    std::vector<std::pair<double, int>> cand;
    cand.reserve(m_);
    for (int j = 0; j < m_; ++j) {
      const double inc = incremental(xi, j);
      if (greedy_ || std::max(partial, inc) < best_) cand.emplace_back(inc, j);
    }
    std::sort(cand.begin(), cand.end());
    if (greedy_ && !cand.empty()) cand.resize(1);
    for (const auto& [inc, j] : cand) {
      const double next = std::max(partial, inc);
      if (!greedy_ && next >= best_) continue;  // best may have improved
      if (out_of_budget()) {
        abandoned_lb_ = std::min(abandoned_lb_, next);
        return;
      }
      ++nodes_;
      cur_.emplace_back(xi, j);
      ++ycount_[j];
      descend_f(level + 1, next);
      --ycount_[j];
      cur_.pop_back();
      if (aborted_) return;
    }
  }

  void descend_g(int level, double partial) {
    if (aborted_) {
      abandoned_lb_ = std::min(abandoned_lb_, partial);
      return;
    }
    if (level == static_cast<int>(uncovered_.size())) {
      if (partial < best_) {
        best_ = partial;
        best_pairs_ = cur_;
      }
      return;
    }
    const int yj = uncovered_[level];
    std::vector<std::pair<double, int>> cand;
    cand.reserve(n_);
    for (int i = 0; i < n_; ++i) {
      const double inc = incremental(i, yj);
      if (greedy_ || std::max(partial, inc) < best_) cand.emplace_back(inc, i);
    }
    std::sort(cand.begin(), cand.end());
    if (greedy_ && !cand.empty()) cand.resize(1);
    for (const auto& [inc, i] : cand) {
      const double next = std::max(partial, inc);
      if (!greedy_ && next >= best_) continue;
      if (out_of_budget()) {
        abandoned_lb_ = std::min(abandoned_lb_, next);
        return;
      }
      ++nodes_;
      cur_.emplace_back(i, yj);
      descend_g(level + 1, next);
      cur_.pop_back();
      if (aborted_) return;
    }
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  const int n_;
  const int m_;
  const std::uint64_t node_budget_;

  std::vector<int> xorder_;
  std::vector<std::pair<int, int>> cur_;
  std::vector<int> ycount_;
  std::vector<int> uncovered_;

  bool greedy_ = false;
  double best_ = kInf;
  std::vector<std::pair<int, int>> best_pairs_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  double abandoned_lb_ = kInf;
};

}  // namespace

GHResult gh_exact_bruteforce(const FiniteMetricSpace& x,
                             const FiniteMetricSpace& y, int budget) {
  GHResult out;
  double best = kInf;
  Correspondence witness;
  std::uint64_t seen = enumerate_correspondences(
      x.size(), y.size(),
      [&](const Correspondence& c) {
        const double d = distortion(c, x, y);
        if (d < best) {
          best = d;
          witness = c;
        }
        return true;
      },
      budget);
  out.distance = best / 2.0;
  out.lower = out.upper = out.distance;
  out.exact = true;
  out.witness = std::move(witness);
  out.node_count = seen;
  return out;
}

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const GHOptions& options) {
  Solver solver(x, y, options.node_budget);
  return solver.run();
}

double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return std::abs(diam(x) - diam(y)) / 2.0;
}

}  // namespace ghlab
