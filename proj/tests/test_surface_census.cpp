#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mincplx/complex.hpp"
#include "mincplx/rng.hpp"
#include "mincplx/surface_census.hpp"
#include "support.hpp"

using namespace mincplx;

namespace {

const std::vector<Triangle> kTetrahedron{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
const std::vector<Triangle> kOctahedron{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {6, 2, 3}, {6, 3, 4}, {6, 4, 5}, {6, 2, 5}};

}  // namespace

TEST_CASE("small closed surfaces", "[surface]") {
  const SurfaceCheckResult t = surface_check(kTetrahedron);
  CHECK(t.is_closed_surface);
  CHECK(t.orientable);
  CHECK(t.euler_characteristic == 2);
  CHECK(t.genus == 0);

  const SurfaceCheckResult o = surface_check(kOctahedron);
  CHECK(o.is_closed_surface);
  CHECK(o.orientable);
  CHECK(o.euler_characteristic == 2);
  CHECK(o.genus == 0);
  CHECK(o.vertex_count == 6);
  CHECK(o.edge_count == 12);
  CHECK(o.triangle_count == 8);
}

TEST_CASE("non-surfaces are rejected with a reason", "[surface]") {
  const std::vector<Triangle> two{{1, 2, 3}, {2, 3, 4}};
  const SurfaceCheckResult r = surface_check(two);
  CHECK_FALSE(r.is_closed_surface);
  CHECK(r.reason == SurfaceReason::edge_degree);
  CHECK_FALSE(r.genus.has_value());

  CHECK(surface_check(std::vector<Triangle>{}).reason == SurfaceReason::empty);
  CHECK(surface_check(std::vector<Triangle>{{1, 1, 2}}).reason == SurfaceReason::invalid_triangle);
  std::vector<Triangle> dup = kTetrahedron;
  dup.push_back({3, 2, 1});
  CHECK(surface_check(dup).reason == SurfaceReason::duplicate_triangle);

  // Two tetrahedra sharing a vertex: edges fine, the shared vertex link has two cycles.
  std::vector<Triangle> pinched = kTetrahedron;
  for (Triangle t : kTetrahedron) {
    for (int& v : t)
      if (v != 1) v += 3;
    pinched.push_back(t);
  }
  CHECK(surface_check(pinched).reason == SurfaceReason::vertex_link);

  // Two disjoint tetrahedra.
  std::vector<Triangle> apart = kTetrahedron;
  for (Triangle t : kTetrahedron) {
    for (int& v : t) v += 4;
    apart.push_back(t);
  }
  const SurfaceCheckResult d = surface_check(apart);
  CHECK(d.reason == SurfaceReason::disconnected);
  CHECK(d.euler_characteristic == 4);
}

TEST_CASE("the projective plane is closed but not orientable", "[surface]") {
  const std::vector<Triangle> rp2{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  const SurfaceCheckResult r = surface_check(rp2);
  CHECK(r.is_closed_surface);
  CHECK_FALSE(r.orientable);
  CHECK(r.euler_characteristic == 1);
  CHECK_FALSE(r.genus.has_value());
}

TEST_CASE("surface checks are relabeling-invariant", "[surface][property]") {
  const KComplex fixture = deserialize_complex(testing_support::read_text(testing_support::data_path("genus2_10v.cplx")));
  std::vector<Triangle> base;
  for (const Face& f : fixture.top_faces()) base.push_back({f[0], f[1], f[2]});
  for (const std::vector<Triangle>* tris : {&kOctahedron, static_cast<const std::vector<Triangle>*>(&base)}) {
    const SurfaceCheckResult expected = surface_check(*tris);
    rng::SplitMix64 gen(static_cast<std::uint64_t>(tris->size()));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> perm(11);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), gen);
      std::vector<Triangle> moved;
      for (Triangle t : *tris) {
        for (int& v : t) v = perm[v];
        moved.push_back(t);
      }
      std::shuffle(moved.begin(), moved.end(), gen);
      CHECK(surface_check(moved) == expected);
    }
  }
}

TEST_CASE("the bundled genus-two fixture", "[surface][fixture]") {
  const KComplex x = deserialize_complex(testing_support::read_text(testing_support::data_path("genus2_10v.cplx")));
  CHECK(x.n() == 10);
  CHECK(x.top_face_count() == 24);
  const SurfaceCheckResult r = surface_check(x);
  CHECK(r.is_closed_surface);
  CHECK(r.orientable);
  CHECK(r.euler_characteristic == -2);
  CHECK(r.genus == 2);
  CHECK(static_cast<long>(r.triangle_count) == euler_face_count(10, 2));
  CHECK_THROWS_AS(surface_check(make_complete_complex(5, 3)), Error);
}

TEST_CASE("Euler face counts", "[euler]") {
  CHECK(euler_face_count(10, 2) == 24);
  CHECK(euler_face_count(4, 0) == 4);
  CHECK(euler_face_count(7, 1) == 14);
  CHECK_THROWS_AS(euler_face_count(2, 0), Error);
  CHECK_THROWS_AS(euler_face_count(5, -1), Error);
}

TEST_CASE("sphere enumeration", "[enumerate]") {
  const std::vector<std::size_t> counts{0, 1, 10, 195, 5712};
  for (int l = 3; l <= 7; ++l) {
    const auto all = enumerate_sphere_triangulations(l);
    CHECK(all.size() == counts[static_cast<std::size_t>(l - 3)]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& t : all) {
      REQUIRE(static_cast<long>(t.size()) == euler_face_count(l, 0));
      const SurfaceCheckResult r = surface_check(t);
      REQUIRE(r.is_closed_surface);
      REQUIRE(r.genus == 0);
      REQUIRE(r.vertex_count == static_cast<std::size_t>(l));
    }
    // Consistency with an exponential growth bound.
    CHECK(static_cast<double>(all.size()) <= std::pow(12.0 * std::sqrt(3.0), l));
  }
  CHECK(enumerate_sphere_triangulations(4).front() == kTetrahedron);
  CHECK_THROWS_AS(enumerate_sphere_triangulations(2), Error);
  CHECK_THROWS_AS(enumerate_sphere_triangulations(8), Error);
}

TEST_CASE("union bound evaluations", "[bound]") {
  CHECK(union_bound_closed_form({100, 0.0, 21.0, 2}) == 0.0);
  CHECK(union_bound_direct_sum({100, 0.0, 21.0, 2}) == 0.0);

  const BoundParams small{10, 0.1, 2.0, 2};
  const double closed = union_bound_closed_form(small);
  // Independent evaluation of the series term by term.
  double reference = 0.0;
  for (int l = 1; l <= 10; ++l) reference += std::pow(2.0, l) * std::pow(10.0, l) * std::pow(0.01, l + 2);
  CHECK(closed == Catch::Approx(reference).epsilon(1e-12));
  CHECK(union_bound_direct_sum(small) == Catch::Approx(closed).epsilon(1e-12));

  const double at100 = union_bound_closed_form({100, 0.01, 21.0, 2});
  const double at10k = union_bound_closed_form({10'000, 0.01, 21.0, 2});
  // The series part is already saturated at n = 100, so the ratio is the
  // prefactor ratio (100 / 10^4)^2 up to rounding; it can never drop below it.
  CHECK(at10k / at100 == Catch::Approx(1e-4).epsilon(1e-12));
  CHECK(at10k / at100 >= 1e-4 * (1 - 1e-15));
  CHECK(union_bound_closed_form({1'000'000, 0.01, 21.0, 2}) < at10k);

  try {
    (void)union_bound_closed_form({10, 0.5, 2.0, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular);
  }
  CHECK_THROWS_AS(union_bound_direct_sum({0, 0.1, 2.0, 2}), Error);
}

TEST_CASE("closed form and direct sum agree over a grid", "[bound][property]") {
  for (long n : {10L, 50L, 100L, 1000L, 10000L})
    for (double ck : {0.05, 0.3, 0.7, 0.95}) {
      const double k = 21.0;
      const BoundParams b{n, ck / k, k, 2};
      CHECK(union_bound_direct_sum(b) == Catch::Approx(union_bound_closed_form(b)).epsilon(1e-12));
    }
}
