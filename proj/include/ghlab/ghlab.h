/* ghlab: exact Gromov-Hausdorff distances, geodesics, Hausdorff geometry of
 * interval unions, and ball-convexity verification for finite metric spaces.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * destroyed here; every fallible call returns a ghlab_status, with a
 * thread-local message available from ghlab_last_error(). Strings returned
 * through char** are heap-allocated; release them with ghlab_string_free().
 */
#ifndef GHLAB_H
#define GHLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghlab_status {
  GHLAB_OK = 0,
  GHLAB_ERR_INVALID_ARGUMENT = 1,
  GHLAB_ERR_NOT_METRIC = 2,
  GHLAB_ERR_PRECONDITION = 3,
  GHLAB_ERR_BUDGET = 4,
  GHLAB_ERR_GENERATION = 5,
  GHLAB_ERR_INTERNAL = 6
} ghlab_status;

typedef struct ghlab_space ghlab_space;
typedef struct ghlab_gh_result ghlab_gh_result;
typedef struct ghlab_geodesic ghlab_geodesic;
typedef struct ghlab_iu ghlab_iu;

/* Message for the most recent failing call on this thread ("" if none). */
const char* ghlab_last_error(void);

void ghlab_string_free(char* s);

/* ---- finite metric spaces ---- */

/* Validates the n x n row-major matrix as a metric (triangle inequality
 * with slack tol) and creates a space. */
ghlab_status ghlab_space_create(int n, const double* d_row_major, double tol,
                                ghlab_space** out);

/* Deterministic-in-seed general-position space with minimum separation
 * min_sep * scale for both the smallest distance and the smallest
 * distance gap. */
ghlab_status ghlab_space_random(int n, uint64_t seed, double scale,
                                double min_sep, ghlab_space** out);

void ghlab_space_free(ghlab_space* s);
int ghlab_space_size(const ghlab_space* s);
/* Copies the n*n row-major matrix into out. */
void ghlab_space_matrix(const ghlab_space* s, double* out);
/* Any output pointer may be NULL. s and e are +inf for degenerate spaces. */
void ghlab_space_diagnostics(const ghlab_space* s, double* diam, double* s_min,
                             double* e_min, int* general_position);
/* d_GH(X, one-point space) = diam / 2. */
double ghlab_space_gh_to_point(const ghlab_space* s);

/* ---- Gromov-Hausdorff distance ---- */

/* Exact distance by branch-and-bound. node_budget 0 means unlimited; with a
 * budget the result may be inexact and carries a certified interval. */
ghlab_status ghlab_gh_exact(const ghlab_space* x, const ghlab_space* y,
                            uint64_t node_budget, ghlab_gh_result** out);

/* Brute-force enumeration over all correspondences; requires
 * size(x) * size(y) <= budget (<= 62). */
ghlab_status ghlab_gh_bruteforce(const ghlab_space* x, const ghlab_space* y,
                                 int budget, ghlab_gh_result** out);

void ghlab_gh_result_free(ghlab_gh_result* r);
double ghlab_gh_result_distance(const ghlab_gh_result* r);
double ghlab_gh_result_lower(const ghlab_gh_result* r);
double ghlab_gh_result_upper(const ghlab_gh_result* r);
int ghlab_gh_result_exact(const ghlab_gh_result* r);
uint64_t ghlab_gh_result_nodes(const ghlab_gh_result* r);
int ghlab_gh_result_witness_size(const ghlab_gh_result* r);
/* Fills xs[k], ys[k] with the k-th witness pair; arrays must hold
 * witness_size entries. */
void ghlab_gh_result_witness(const ghlab_gh_result* r, int* xs, int* ys);

/* |diam X - diam Y| / 2. */
double ghlab_gh_lower_bound(const ghlab_space* x, const ghlab_space* y);

/* ---- geodesics ---- */

ghlab_status ghlab_geodesic_create(const ghlab_space* x, const ghlab_space* y,
                                   ghlab_geodesic** out);
void ghlab_geodesic_free(ghlab_geodesic* g);
double ghlab_geodesic_distance(const ghlab_geodesic* g);
/* Evaluates R_t for t in [0, 1]; endpoints return the endpoint spaces. */
ghlab_status ghlab_geodesic_at(const ghlab_geodesic* g, double t,
                               ghlab_space** out);

/* ---- interval unions on the real line ---- */

/* endpoints holds k pairs lo0, hi0, lo1, hi1, ...; the union is normalized
 * (sorted, touching intervals merged). */
ghlab_status ghlab_iu_create(int k, const double* endpoints, ghlab_iu** out);
void ghlab_iu_free(ghlab_iu* u);
int ghlab_iu_count(const ghlab_iu* u);
/* Copies 2 * count endpoints. */
void ghlab_iu_intervals(const ghlab_iu* u, double* endpoints);
double ghlab_iu_diameter(const ghlab_iu* u);
ghlab_status ghlab_iu_neighborhood(const ghlab_iu* u, double r,
                                   ghlab_iu** out);
double ghlab_iu_hausdorff(const ghlab_iu* a, const ghlab_iu* b);
/* C_s(A, B) = B_s(A) intersect B_{r-s}(B), 0 <= s <= r = d_H(A, B). */
ghlab_status ghlab_iu_c_s(const ghlab_iu* a, const ghlab_iu* b, double s,
                          ghlab_iu** out);
ghlab_status ghlab_iu_discretize(const ghlab_iu* u, double step,
                                 int max_points, ghlab_space** out);

/* ---- canonical partitions ---- */

/* Labels each point of x by a point of the general-position center m, via
 * an optimal correspondence. labels must hold size(x) entries. */
ghlab_status ghlab_canonical_partition(const ghlab_space* m,
                                       const ghlab_space* x, double eps,
                                       int* labels);

/* ---- theorem verification (reports as JSON strings) ---- */

ghlab_status ghlab_verify_theorem1(const ghlab_space* x, const ghlab_space* y,
                                   double r, int t_grid, char** json_out,
                                   int* pass);
ghlab_status ghlab_verify_theorem2(double r, int grid, char** json_out,
                                   int* pass);
ghlab_status ghlab_verify_theorem3(const ghlab_space* m, const ghlab_space* x,
                                   const ghlab_space* y, int t_grid,
                                   char** json_out, int* pass);
ghlab_status ghlab_theorem2_report(double r, int grid, char** json_out);
ghlab_status ghlab_campaign(uint64_t seed, int trials, const int* sizes,
                            int n_sizes, char** json_out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* GHLAB_H */
