#include "ghlab/ghlab.h"

#include <cstring>
#include <new>
#include <string>

#include "harness.hpp"

using ghlab::Error;
using ghlab::ErrorCode;

struct ghlab_space {
  ghlab::FiniteMetricSpace value;
};
struct ghlab_gh_result {
  ghlab::GHResult value;
};
struct ghlab_geodesic {
  ghlab::GeodesicCurve value;
};
struct ghlab_iu {
  ghlab::IntervalUnion value;
};

namespace {

thread_local std::string g_last_error;

ghlab_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return GHLAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_metric:
      return GHLAB_ERR_NOT_METRIC;
    case ErrorCode::precondition:
      return GHLAB_ERR_PRECONDITION;
    case ErrorCode::budget_exceeded:
      return GHLAB_ERR_BUDGET;
    case ErrorCode::generation_failed:
      return GHLAB_ERR_GENERATION;
  }
  return GHLAB_ERR_INTERNAL;
}

template <typename Fn>
ghlab_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GHLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GHLAB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump_json(const nlohmann::json& j) { return dup_string(j.dump(2)); }

}  // namespace

extern "C" {

const char* ghlab_last_error(void) { return g_last_error.c_str(); }

void ghlab_string_free(char* s) { delete[] s; }

ghlab_status ghlab_space_create(int n, const double* d, double tol,
                                ghlab_space** out) {
  return guarded([&] {
    if (d == nullptr || out == nullptr) {
      throw Error(ErrorCode::invalid_argument, "null pointer argument");
    }
    *out = new ghlab_space{
        ghlab::FiniteMetricSpace::validate_flat(n, d, tol)};
  });
}

ghlab_status ghlab_space_random(int n, uint64_t seed, double scale,
                                double min_sep, ghlab_space** out) {
  return guarded([&] {
    if (out == nullptr) {
      throw Error(ErrorCode::invalid_argument, "null pointer argument");
    }
    *out = new ghlab_space{
        ghlab::random_general_position(n, seed, scale, min_sep)};
  });
}

void ghlab_space_free(ghlab_space* s) { delete s; }

int ghlab_space_size(const ghlab_space* s) { return s->value.size(); }

void ghlab_space_matrix(const ghlab_space* s, double* out) {
  const auto& m = s->value.matrix();
  std::memcpy(out, m.data(), m.size() * sizeof(double));
}

void ghlab_space_diagnostics(const ghlab_space* s, double* diam_out,
                             double* s_min, double* e_min,
                             int* general_position) {
  const ghlab::SpaceDiagnostics d = ghlab::diagnostics(s->value);
  if (diam_out) *diam_out = d.diam;
  if (s_min) *s_min = d.s;
  if (e_min) *e_min = d.e;
  if (general_position) *general_position = d.general_position ? 1 : 0;
}

double ghlab_space_gh_to_point(const ghlab_space* s) {
  return ghlab::gh_to_point(s->value);
}

ghlab_status ghlab_gh_exact(const ghlab_space* x, const ghlab_space* y,
                            uint64_t node_budget, ghlab_gh_result** out) {
  return guarded([&] {
    ghlab::GHOptions opt;
    opt.node_budget = node_budget;
    *out = new ghlab_gh_result{ghlab::gh_exact(x->value, y->value, opt)};
  });
}

ghlab_status ghlab_gh_bruteforce(const ghlab_space* x, const ghlab_space* y,
                                 int budget, ghlab_gh_result** out) {
  return guarded([&] {
    *out = new ghlab_gh_result{
        ghlab::gh_exact_bruteforce(x->value, y->value, budget)};
  });
}

void ghlab_gh_result_free(ghlab_gh_result* r) { delete r; }

double ghlab_gh_result_distance(const ghlab_gh_result* r) {
  return r->value.distance;
}
double ghlab_gh_result_lower(const ghlab_gh_result* r) {
  return r->value.lower;
}
double ghlab_gh_result_upper(const ghlab_gh_result* r) {
  return r->value.upper;
}
int ghlab_gh_result_exact(const ghlab_gh_result* r) {
  return r->value.exact ? 1 : 0;
}
uint64_t ghlab_gh_result_nodes(const ghlab_gh_result* r) {
  return r->value.node_count;
}
int ghlab_gh_result_witness_size(const ghlab_gh_result* r) {
  return static_cast<int>(r->value.witness.pairs.size());
}
void ghlab_gh_result_witness(const ghlab_gh_result* r, int* xs, int* ys) {
  const auto& pairs = r->value.witness.pairs;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    xs[k] = pairs[k].first;
    ys[k] = pairs[k].second;
  }
}

double ghlab_gh_lower_bound(const ghlab_space* x, const ghlab_space* y) {
  return ghlab::gh_lower_bound(x->value, y->value);
}

ghlab_status ghlab_geodesic_create(const ghlab_space* x, const ghlab_space* y,
                                   ghlab_geodesic** out) {
  return guarded([&] {
    *out = new ghlab_geodesic{
        ghlab::GeodesicCurve::make(x->value, y->value)};
  });
}

void ghlab_geodesic_free(ghlab_geodesic* g) { delete g; }

double ghlab_geodesic_distance(const ghlab_geodesic* g) {
  return g->value.gh();
}

ghlab_status ghlab_geodesic_at(const ghlab_geodesic* g, double t,
                               ghlab_space** out) {
  return guarded([&] { *out = new ghlab_space{g->value.at(t)}; });
}

ghlab_status ghlab_iu_create(int k, const double* endpoints, ghlab_iu** out) {
  return guarded([&] {
    if (k < 1 || endpoints == nullptr || out == nullptr) {
      throw Error(ErrorCode::invalid_argument,
                  "need at least one interval and valid pointers");
    }
    std::vector<ghlab::Interval> ivs(k);
    for (int i = 0; i < k; ++i) {
      ivs[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    }
    *out = new ghlab_iu{ghlab::IntervalUnion::from_intervals(std::move(ivs))};
  });
}

void ghlab_iu_free(ghlab_iu* u) { delete u; }

int ghlab_iu_count(const ghlab_iu* u) {
  return static_cast<int>(u->value.intervals().size());
}

void ghlab_iu_intervals(const ghlab_iu* u, double* endpoints) {
  const auto& ivs = u->value.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    endpoints[2 * i] = ivs[i].lo;
    endpoints[2 * i + 1] = ivs[i].hi;
  }
}

double ghlab_iu_diameter(const ghlab_iu* u) { return u->value.diameter(); }

ghlab_status ghlab_iu_neighborhood(const ghlab_iu* u, double r,
                                   ghlab_iu** out) {
  return guarded([&] { *out = new ghlab_iu{u->value.neighborhood(r)}; });
}

double ghlab_iu_hausdorff(const ghlab_iu* a, const ghlab_iu* b) {
  return ghlab::hausdorff_distance(a->value, b->value);
}

ghlab_status ghlab_iu_c_s(const ghlab_iu* a, const ghlab_iu* b, double s,
                          ghlab_iu** out) {
  return guarded(
      [&] { *out = new ghlab_iu{ghlab::c_s(a->value, b->value, s)}; });
}

ghlab_status ghlab_iu_discretize(const ghlab_iu* u, double step,
                                 int max_points, ghlab_space** out) {
  return guarded(
      [&] { *out = new ghlab_space{u->value.discretize(step, max_points)}; });
}

ghlab_status ghlab_canonical_partition(const ghlab_space* m,
                                       const ghlab_space* x, double eps,
                                       int* labels) {
  return guarded([&] {
    if (labels == nullptr) {
      throw Error(ErrorCode::invalid_argument, "null labels pointer");
    }
    const ghlab::Partition p =
        ghlab::canonical_partition(m->value, x->value, eps);
    for (std::size_t i = 0; i < p.labels.size(); ++i) labels[i] = p.labels[i];
  });
}

ghlab_status ghlab_verify_theorem1(const ghlab_space* x, const ghlab_space* y,
                                   double r, int t_grid, char** json_out,
                                   int* pass) {
  return guarded([&] {
    const ghlab::TheoremReport rep =
        ghlab::verify_theorem1(x->value, y->value, r, t_grid);
    if (json_out) *json_out = dump_json(rep.to_json());
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

ghlab_status ghlab_verify_theorem2(double r, int grid, char** json_out,
                                   int* pass) {
  return guarded([&] {
    const ghlab::TheoremReport rep = ghlab::verify_theorem2(r, grid);
    if (json_out) *json_out = dump_json(rep.to_json());
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

ghlab_status ghlab_verify_theorem3(const ghlab_space* m, const ghlab_space* x,
                                   const ghlab_space* y, int t_grid,
                                   char** json_out, int* pass) {
  return guarded([&] {
    const ghlab::TheoremReport rep =
        ghlab::verify_theorem3(m->value, x->value, y->value, t_grid);
    if (json_out) *json_out = dump_json(rep.to_json());
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

ghlab_status ghlab_theorem2_report(double r, int grid, char** json_out) {
  return guarded([&] {
    const ghlab::CounterexampleReport rep = ghlab::theorem2_report(r, grid);
    if (json_out) *json_out = dump_json(rep.to_json());
  });
}

ghlab_status ghlab_campaign(uint64_t seed, int trials, const int* sizes,
                            int n_sizes, char** json_out, int* pass) {
  return guarded([&] {
    if (sizes == nullptr || n_sizes < 1) {
      throw Error(ErrorCode::invalid_argument, "need at least one size");
    }
    const ghlab::CampaignSummary summary =
        ghlab::campaign(seed, trials, std::vector<int>(sizes, sizes + n_sizes));
    if (json_out) *json_out = dump_json(summary.to_json());
    if (pass) *pass = summary.pass ? 1 : 0;
  });
}

}  // extern "C"
