// Exercises the shared-library C API end to end: object lifecycles, error
// reporting, and the JSON report surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ghlab/ghlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ghlab_string_free(s);
  return out;
}

ghlab_space* make_triangle() {
  const double d[] = {0, 3, 4, 3, 0, 6, 4, 6, 0};
  ghlab_space* s = nullptr;
  REQUIRE(ghlab_space_create(3, d, 0.0, &s) == GHLAB_OK);
  return s;
}

}  // namespace

TEST_CASE("space creation, diagnostics and round-trip") {
  ghlab_space* s = make_triangle();
  CHECK(ghlab_space_size(s) == 3);
  double m[9];
  ghlab_space_matrix(s, m);
  CHECK(m[1] == 3.0);
  CHECK(m[5] == 6.0);
  double diam, sv, ev;
  int gp;
  ghlab_space_diagnostics(s, &diam, &sv, &ev, &gp);
  CHECK(diam == 6.0);
  CHECK(sv == 3.0);
  CHECK(ev == 1.0);
  CHECK(gp == 1);
  CHECK(ghlab_space_gh_to_point(s) == 3.0);
  ghlab_space_free(s);
}

TEST_CASE("invalid matrices report not_metric with a message") {
  const double d[] = {0, 1, 2, 0};
  ghlab_space* s = nullptr;
  CHECK(ghlab_space_create(2, d, 0.0, &s) == GHLAB_ERR_NOT_METRIC);
  CHECK(std::strlen(ghlab_last_error()) > 0);
  CHECK(ghlab_space_create(2, nullptr, 0.0, &s) ==
        GHLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("gh distance and witness through the C API") {
  const double da[] = {0, 2, 2, 0};
  const double db[] = {0, 4, 4, 0};
  ghlab_space *a = nullptr, *b = nullptr;
  REQUIRE(ghlab_space_create(2, da, 0.0, &a) == GHLAB_OK);
  REQUIRE(ghlab_space_create(2, db, 0.0, &b) == GHLAB_OK);
  ghlab_gh_result* r = nullptr;
  REQUIRE(ghlab_gh_exact(a, b, 0, &r) == GHLAB_OK);
  CHECK(ghlab_gh_result_distance(r) == 1.0);
  CHECK(ghlab_gh_result_exact(r) == 1);
  const int k = ghlab_gh_result_witness_size(r);
  REQUIRE(k >= 2);
  std::vector<int> xs(k), ys(k);
  ghlab_gh_result_witness(r, xs.data(), ys.data());
  ghlab_gh_result_free(r);

  ghlab_gh_result* bf = nullptr;
  REQUIRE(ghlab_gh_bruteforce(a, b, 20, &bf) == GHLAB_OK);
  CHECK(ghlab_gh_result_distance(bf) == 1.0);
  ghlab_gh_result_free(bf);
  CHECK(ghlab_gh_lower_bound(a, b) == 1.0);
  ghlab_space_free(a);
  ghlab_space_free(b);
}

TEST_CASE("random spaces are deterministic through the C API") {
  ghlab_space *a = nullptr, *b = nullptr;
  REQUIRE(ghlab_space_random(5, 99, 2.0, 0.01, &a) == GHLAB_OK);
  REQUIRE(ghlab_space_random(5, 99, 2.0, 0.01, &b) == GHLAB_OK);
  std::vector<double> ma(25), mb(25);
  ghlab_space_matrix(a, ma.data());
  ghlab_space_matrix(b, mb.data());
  CHECK(ma == mb);
  ghlab_space_free(a);
  ghlab_space_free(b);
}

TEST_CASE("geodesic evaluation") {
  const double da[] = {0, 2, 2, 0};
  const double db[] = {0, 4, 4, 0};
  ghlab_space *a = nullptr, *b = nullptr;
  REQUIRE(ghlab_space_create(2, da, 0.0, &a) == GHLAB_OK);
  REQUIRE(ghlab_space_create(2, db, 0.0, &b) == GHLAB_OK);
  ghlab_geodesic* g = nullptr;
  REQUIRE(ghlab_geodesic_create(a, b, &g) == GHLAB_OK);
  CHECK(ghlab_geodesic_distance(g) == 1.0);
  ghlab_space* mid = nullptr;
  REQUIRE(ghlab_geodesic_at(g, 0.5, &mid) == GHLAB_OK);
  double m[4];
  ghlab_space_matrix(mid, m);
  CHECK(m[1] == 3.0);
  ghlab_space_free(mid);
  CHECK(ghlab_geodesic_at(g, 2.0, &mid) == GHLAB_ERR_INVALID_ARGUMENT);
  ghlab_geodesic_free(g);
  ghlab_space_free(a);
  ghlab_space_free(b);
}

TEST_CASE("interval unions") {
  const double pts[] = {0, 0, 2, 2};
  ghlab_iu* u = nullptr;
  REQUIRE(ghlab_iu_create(2, pts, &u) == GHLAB_OK);
  CHECK(ghlab_iu_count(u) == 2);
  CHECK(ghlab_iu_diameter(u) == 2.0);
  ghlab_iu* n = nullptr;
  REQUIRE(ghlab_iu_neighborhood(u, 1.0, &n) == GHLAB_OK);
  CHECK(ghlab_iu_count(n) == 1);
  double e[2];
  ghlab_iu_intervals(n, e);
  CHECK(e[0] == -1.0);
  CHECK(e[1] == 3.0);
  ghlab_iu_free(n);

  const double seg[] = {0, 2};
  ghlab_iu* a = nullptr;
  REQUIRE(ghlab_iu_create(1, seg, &a) == GHLAB_OK);
  CHECK(ghlab_iu_hausdorff(a, u) == 1.0);
  ghlab_iu* mid = nullptr;
  REQUIRE(ghlab_iu_c_s(a, u, 0.5, &mid) == GHLAB_OK);
  CHECK(ghlab_iu_diameter(mid) == 3.0);
  ghlab_space* disc = nullptr;
  REQUIRE(ghlab_iu_discretize(mid, 0.25, 128, &disc) == GHLAB_OK);
  CHECK(ghlab_space_size(disc) > 2);
  ghlab_space_free(disc);
  ghlab_iu_free(mid);
  CHECK(ghlab_iu_c_s(a, u, 9.0, &mid) == GHLAB_ERR_PRECONDITION);
  ghlab_iu_free(a);
  ghlab_iu_free(u);
}

TEST_CASE("canonical partition through the C API") {
  ghlab_space* m = make_triangle();
  const double dx[] = {0, 3.1, 3.9, 3.1, 0, 6.05, 3.9, 6.05, 0};
  ghlab_space* x = nullptr;
  REQUIRE(ghlab_space_create(3, dx, 0.0, &x) == GHLAB_OK);
  int labels[3];
  REQUIRE(ghlab_canonical_partition(m, x, 0.25, labels) == GHLAB_OK);
  CHECK(labels[0] == 0);
  CHECK(labels[1] == 1);
  CHECK(labels[2] == 2);
  CHECK(ghlab_canonical_partition(m, x, 5.0, labels) ==
        GHLAB_ERR_PRECONDITION);
  ghlab_space_free(x);
  ghlab_space_free(m);
}

TEST_CASE("verification reports arrive as JSON") {
  char* text = nullptr;
  int pass = 0;
  REQUIRE(ghlab_verify_theorem2(1.0, 11, &text, &pass) == GHLAB_OK);
  CHECK(pass == 1);
  const nlohmann::json j = nlohmann::json::parse(take(text));
  CHECK(j["theorem"] == "theorem2");
  CHECK(j["pass"] == true);
  CHECK(j["worst_margin"] == 0.5);

  char* rep = nullptr;
  REQUIRE(ghlab_theorem2_report(1.0, 11, &rep) == GHLAB_OK);
  const nlohmann::json cj = nlohmann::json::parse(take(rep));
  CHECK(cj["diam_mid"] == 3.0);

  char* camp = nullptr;
  const int sizes[] = {3};
  REQUIRE(ghlab_campaign(5, 1, sizes, 1, &camp, &pass) == GHLAB_OK);
  CHECK(pass == 1);
  const nlohmann::json sj = nlohmann::json::parse(take(camp));
  CHECK(sj["pass"] == true);
}
