#include <catch_amalgamated.hpp>

#include "mincplx/link_graphs.hpp"
#include "mincplx/minor_finder.hpp"
#include "mincplx/oracles.hpp"
#include "mincplx/random_gen.hpp"
#include "support.hpp"

using namespace mincplx;
using testing_support::explicit_complex;

TEST_CASE("reference common links", "[oracle][link]") {
  const Graph g = oracle::brute_common_link(make_complete_complex(5, 2), Face{1, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}});
  CHECK(oracle::brute_common_link(KComplex(7, 2, {}), Face{1, 2}).edge_count() == 0);
  CHECK_THROWS_AS(oracle::brute_common_link(KComplex(16, 2, {}), Face{1, 2}), Error);
}

TEST_CASE("fast and reference common links agree", "[oracle][link][property]") {
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2 + trial % 2;
    const int n = 6 + trial % 7;
    const double p = 0.2 + 0.6 * static_cast<double>(trial % 5) / 4.0;
    const KComplex x = sample_complex({n, k, p, std::nullopt, rng::derive_trial_seed(50, trial)});
    Face f = Face::from_unsorted({1 + trial % (n - k)});
    std::vector<int> verts;
    for (int i = 0; i < k; ++i) verts.push_back(1 + (trial + 3 * i) % n);
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) continue;
    f = Face(verts);
    REQUIRE(common_link_graph(x, f) == oracle::brute_common_link(x, f));
    ++compared;
  }
  CHECK(compared > 400);
}

TEST_CASE("structured minor oracle basics", "[oracle][minor]") {
  CHECK(oracle::exhaustive_structured_minor_search(make_complete_complex(6, 2), 3, 0));
  CHECK(oracle::exhaustive_structured_minor_search(make_complete_complex(6, 2), 4, 0));
  CHECK_FALSE(oracle::exhaustive_structured_minor_search(KComplex(10, 2, {}), 3, 5));
  // A single triangle is a K_3^2.
  CHECK(oracle::exhaustive_structured_minor_search(explicit_complex(5, 2, {{2, 4, 5}}), 3, 0));
  // A subdivided missing face: the disk 1,2 fanned over the path 4-5 with cap {1,2,5}... needs 3.
  const KComplex disk = explicit_complex(6, 2, {{1, 3, 4}, {2, 3, 4}, {1, 4, 5}, {2, 4, 5}, {1, 2, 5}});
  CHECK(oracle::exhaustive_structured_minor_search(disk, 3, 2));
  CHECK(oracle::exhaustive_structured_minor_search(disk, 3, 1));
  CHECK_THROWS_AS(oracle::exhaustive_structured_minor_search(KComplex(15, 2, {}), 3, 1), Error);
  CHECK_THROWS_AS(oracle::exhaustive_structured_minor_search(KComplex(10, 2, {}), 5, 1), Error);
  CHECK_THROWS_AS(oracle::exhaustive_structured_minor_search(make_complete_complex(8, 3), 4, 1), Error);
}

TEST_CASE("finder success implies the oracle accepts", "[oracle][minor][property]") {
  int finder_hits = 0, oracle_only = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8 + trial % 5;
    const double p = 0.35 + 0.1 * (trial % 6);
    const KComplex x = sample_complex({n, 2, p, std::nullopt, rng::derive_trial_seed(60, trial)});
    FinderConfig cfg;
    cfg.t = 3;
    const auto m = find_topological_minor(x, cfg);
    const bool oracle = oracle::exhaustive_structured_minor_search(x, 3, n);
    if (m) {
      ++finder_hits;
      CHECK(verify_minor_witness(x, m->witness).ok());
      CHECK(oracle);
    } else if (oracle) {
      ++oracle_only;
    }
  }
  CHECK(finder_hits > 20);
  CHECK(oracle_only >= 0);
}

TEST_CASE("reference triangulation enumeration", "[oracle][enumerate]") {
  CHECK(oracle::brute_enumerate_triangulations(4, 4).size() == 1);
  CHECK(oracle::brute_enumerate_triangulations(5, 6).size() == 10);
  CHECK(oracle::brute_enumerate_triangulations(5, 5).empty());
  CHECK(oracle::brute_enumerate_triangulations(3, 2).empty());
  for (int l = 4; l <= 6; ++l) CHECK(oracle::brute_enumerate_triangulations(l, 2 * l - 4) == enumerate_sphere_triangulations(l));
  CHECK_THROWS_AS(oracle::brute_enumerate_triangulations(7, 10), Error);
}
