#include "correspondence.hpp"

#include <algorithm>
#include <cmath>

namespace ghlab {

Relation Relation::from_pairs(int nx, int ny,
                              std::vector<std::pair<int, int>> pairs) {
  if (nx < 1 || ny < 1) {
    throw Error(ErrorCode::invalid_argument, "side sizes must be >= 1");
  }
  if (pairs.empty()) {
    throw Error(ErrorCode::invalid_argument, "relation must be nonempty");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= nx || j < 0 || j >= ny) {
      throw Error(ErrorCode::invalid_argument, "pair index out of range");
    }
  }
  Relation r;
  r.nx = nx;
  r.ny = ny;
  r.pairs = std::move(pairs);
  return r;
}

bool Relation::surjective_x() const {
  std::vector<char> hit(nx, 0);
  for (const auto& [i, j] : pairs) hit[i] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

bool Relation::surjective_y() const {
  std::vector<char> hit(ny, 0);
  for (const auto& [i, j] : pairs) hit[j] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

Correspondence Correspondence::from_pairs(
    int nx, int ny, std::vector<std::pair<int, int>> pairs) {
  Relation base = Relation::from_pairs(nx, ny, std::move(pairs));
  if (!base.surjective_x() || !base.surjective_y()) {
    throw Error(ErrorCode::invalid_argument,
                "both projections of a correspondence must be surjective");
  }
  Correspondence c;
  static_cast<Relation&>(c) = std::move(base);
  return c;
}

Correspondence Correspondence::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return from_pairs(n, n, std::move(pairs));
}

Correspondence Correspondence::full(int nx, int ny) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) pairs.emplace_back(i, j);
  }
  return from_pairs(nx, ny, std::move(pairs));
}

Correspondence Correspondence::transposed() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(pairs.size());
  for (const auto& [i, j] : pairs) flipped.emplace_back(j, i);
  return from_pairs(ny, nx, std::move(flipped));
}

double distortion(const Relation& sigma, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y) {
  if (sigma.nx != x.size() || sigma.ny != y.size()) {
    throw Error(ErrorCode::invalid_argument,
                "relation side sizes do not match the spaces");
  }
  double worst = 0.0;
  const auto& p = sigma.pairs;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      worst = std::max(worst, std::abs(x.dist(p[a].first, p[b].first) -
                                       y.dist(p[a].second, p[b].second)));
    }
  }
  return worst;
}

std::uint64_t enumerate_correspondences(
    int nx, int ny, const std::function<bool(const Correspondence&)>& visit,
    int budget) {
  if (nx < 1 || ny < 1) {
    throw Error(ErrorCode::invalid_argument, "side sizes must be >= 1");
  }
  const int bits = nx * ny;
  if (bits > budget || budget > 62) {
    throw Error(ErrorCode::budget_exceeded,
                "enumeration budget exceeded: nx*ny must be <= budget");
  }
  // Row/column coverage masks over the bit grid (bit i*ny + j).
  std::vector<std::uint64_t> rowmask(nx, 0), colmask(ny, 0);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (i * ny + j);
      rowmask[i] |= bit;
      colmask[j] |= bit;
    }
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    bool ok = true;
    for (int i = 0; ok && i < nx; ++i) ok = (mask & rowmask[i]) != 0;
    for (int j = 0; ok && j < ny; ++j) ok = (mask & colmask[j]) != 0;
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < bits; ++b) {
      if (mask & (std::uint64_t{1} << b)) pairs.emplace_back(b / ny, b % ny);
    }
    ++count;
    if (!visit(Correspondence::from_pairs(nx, ny, std::move(pairs)))) break;
  }
  return count;
}

std::vector<Correspondence> all_correspondences(int nx, int ny, int budget) {
  std::vector<Correspondence> out;
  enumerate_correspondences(
      nx, ny,
      [&](const Correspondence& c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

}  // namespace ghlab
