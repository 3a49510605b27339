#include "metric_space.hpp"

#include <cmath>
#include <sstream>

#include "rng.hpp"

namespace ghlab {

namespace {

[[noreturn]] void axiom_error(const std::string& msg) {
  throw Error(ErrorCode::not_metric, msg);
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::validate_flat(int n, const double* m,
                                                   double tol) {
  if (n < 1) {
    throw Error(ErrorCode::invalid_argument, "matrix must be at least 1x1");
  }
  if (tol < 0.0) {
    throw Error(ErrorCode::invalid_argument, "tolerance must be >= 0");
  }
  std::vector<double> d(m, m + static_cast<std::size_t>(n) * n);
  for (const double v : d) {
    if (!std::isfinite(v)) axiom_error("matrix entries must be finite");
  }
  auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) {
      std::ostringstream os;
      os << "nonzero diagonal at (" << i << "," << i << "): " << at(i, i);
      axiom_error(os.str());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) {
        std::ostringstream os;
        os << "asymmetry at (" << i << "," << j << "): " << at(i, j)
           << " != " << at(j, i);
        axiom_error(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) <= 0.0) {
        std::ostringstream os;
        os << "nonpositive off-diagonal at (" << i << "," << j
           << "): " << at(i, j);
        axiom_error(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (at(i, k) > at(i, j) + at(j, k) + tol) {
          std::ostringstream os;
          os << "triangle inequality violated at (" << i << "," << k << ","
             << j << "): " << at(i, k) << " > " << at(i, j) << " + "
             << at(j, k);
          axiom_error(os.str());
        }
      }
    }
  }
  return FiniteMetricSpace(n, std::move(d));
}

FiniteMetricSpace FiniteMetricSpace::validate(
    const std::vector<std::vector<double>>& m, double tol) {
  const int n = static_cast<int>(m.size());
  if (n < 1) {
    throw Error(ErrorCode::invalid_argument, "matrix must be at least 1x1");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::invalid_argument, "matrix must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(n, flat.data(), tol);
}

FiniteMetricSpace FiniteMetricSpace::point() {
  return FiniteMetricSpace(1, {0.0});
}

double diam(const FiniteMetricSpace& x) {
  double best = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      best = std::max(best, x.dist(i, j));
    }
  }
  return best;
}

double s_value(const FiniteMetricSpace& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      best = std::min(best, x.dist(i, j));
    }
  }
  return best;
}

double e_value(const FiniteMetricSpace& x) {
  std::vector<double> pairs;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      pairs.push_back(x.dist(i, j));
    }
  }
  if (pairs.size() < 2) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      best = std::min(best, std::abs(pairs[a] - pairs[b]));
    }
  }
  return best;
}

bool is_general_position(const FiniteMetricSpace& x) {
  const int n = x.size();
  // Distinct nonzero distances.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          if (i == k && j == l) continue;
          if (x.dist(i, j) == x.dist(k, l)) return false;
        }
      }
    }
  }
  // Strict triangles.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (!(x.dist(i, k) < x.dist(i, j) + x.dist(j, k))) return false;
      }
    }
  }
  return true;
}

SpaceDiagnostics diagnostics(const FiniteMetricSpace& x) {
  SpaceDiagnostics out;
  out.diam = diam(x);
  out.s = s_value(x);
  out.e = e_value(x);
  out.general_position = is_general_position(x);
  return out;
}

double gh_to_point(const FiniteMetricSpace& x) { return diam(x) / 2.0; }

FiniteMetricSpace random_general_position(int n, std::uint64_t seed,
                                          double scale, double min_sep,
                                          int max_retries) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (scale <= 0.0 || min_sep < 0.0) {
    throw Error(ErrorCode::invalid_argument, "scale must be > 0, min_sep >= 0");
  }
  if (n == 1) return FiniteMetricSpace::point();
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double v = rng.uniform(0.51 * scale, 0.99 * scale);
        m[i][j] = v;
        m[j][i] = v;
      }
    }
    FiniteMetricSpace space = FiniteMetricSpace::validate(m, 0.0);
    if (!is_general_position(space)) continue;
    if (s_value(space) < min_sep * scale) continue;
    if (n > 2 && e_value(space) < min_sep * scale) continue;
    return space;
  }
  throw Error(ErrorCode::generation_failed,
              "could not generate a general-position space within the retry "
              "budget; min_sep is likely too tight for n");
}

FiniteMetricSpace scale_space(const FiniteMetricSpace& x, double factor) {
  if (!(factor > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "scale factor must be > 0");
  }
  std::vector<double> d = x.matrix();
  for (double& v : d) v *= factor;
  return FiniteMetricSpace(x.size(), std::move(d));
}

}  // namespace ghlab
