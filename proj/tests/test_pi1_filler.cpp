#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "mincplx/pi1_filler.hpp"
#include "mincplx/random_gen.hpp"
#include "mincplx/minor_finder.hpp"
#include "support.hpp"

using namespace mincplx;
using testing_support::explicit_complex;

namespace {

KComplex complete_minus(int n, const Face& missing) {
  std::vector<Face> faces;
  for_each_combination(n, 3, [&](std::span<const int> f) {
    Face face(std::vector<int>(f.begin(), f.end()));
    if (face != missing) faces.push_back(std::move(face));
  });
  return KComplex(n, 2, std::move(faces));
}

// Disk checks on a filling of the cycle {a, b, x}: every boundary edge in one
// triangle, every other edge in two, and V - E + F = 1.
void check_disk(const CycleFilling& f) {
  std::map<std::pair<int, int>, int> degree;
  std::set<int> vertices;
  for (const Face& t : f.triangles) {
    for (int v : t.vertices()) vertices.insert(v);
    degree[{t[0], t[1]}]++;
    degree[{t[0], t[2]}]++;
    degree[{t[1], t[2]}]++;
  }
  const Face cycle = f.cycle();
  const std::set<std::pair<int, int>> boundary{{cycle[0], cycle[1]}, {cycle[0], cycle[2]}, {cycle[1], cycle[2]}};
  for (auto [e, d] : degree) CHECK(d == (boundary.count(e) ? 1 : 2));
  for (const auto& e : boundary) CHECK(degree.count(e) == 1);
  const long chi = static_cast<long>(vertices.size()) - static_cast<long>(degree.size()) + static_cast<long>(f.triangles.size());
  CHECK(chi == 1);
  const std::size_t m = f.path.size() - 1;
  CHECK(f.triangles.size() == 2 * m + 1);
}

}  // namespace

TEST_CASE("good sets on small complexes", "[goodset]") {
  const GoodSetReport full = good_set(make_complete_complex(7, 2), 1, 2);
  CHECK(full.good == std::vector<int>{3, 4, 5, 6, 7});
  CHECK(full.largest_component_size == 5);

  const GoodSetReport r = good_set(explicit_complex(5, 2, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}}), 1, 2);
  CHECK(r.good == std::vector<int>{3});
  CHECK(r.largest_component_size == 2);

  CHECK(good_set(KComplex(6, 2, {}), 2, 5).good.empty());
  CHECK(good_set(explicit_complex(5, 2, {{1, 2, 3}}), 2, 1).a == 1);
  CHECK_THROWS_AS(good_set(make_complete_complex(6, 3), 1, 2), Error);
  CHECK_THROWS_AS(good_set(make_complete_complex(6, 2), 3, 3), Error);
}

TEST_CASE("good sets match their definition", "[goodset][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 9;
    const KComplex x = sample_complex({n, 2, 0.45, std::nullopt, rng::derive_trial_seed(31, trial)});
    const GoodSetReport r = good_set(x, 1, 2);
    // Reachability in G_{1,2} by repeated relaxation.
    std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
    for (int u = 3; u <= n; ++u) {
      reach[u][u] = true;
      for (int v = 3; v <= n; ++v)
        if (u != v && x.contains(Face::from_unsorted({1, u, v})) && x.contains(Face::from_unsorted({2, u, v}))) reach[u][v] = true;
    }
    for (int m = 3; m <= n; ++m)
      for (int i = 3; i <= n; ++i)
        for (int j = 3; j <= n; ++j)
          if (reach[i][m] && reach[m][j]) reach[i][j] = true;
    std::vector<int> expected;
    for (int u = 3; u <= n; ++u)
      for (int y = 3; y <= n; ++y)
        if (reach[u][y] && x.contains(Face{1, 2, y})) {
          expected.push_back(u);
          break;
        }
    CHECK(r.good == expected);
  }
}

TEST_CASE("three-cycle fillings", "[filling]") {
  const auto face = fill_three_cycle(make_complete_complex(6, 2), 3, 1, 2);
  REQUIRE(face.has_value());
  CHECK_FALSE(face->hub.has_value());
  CHECK(face->triangle_count() == 1);

  const KComplex x = complete_minus(6, Face{1, 2, 3});
  const auto f = fill_three_cycle(x, 1, 2, 3);
  REQUIRE(f.has_value());
  REQUIRE(f->hub.has_value());
  CHECK(*f->hub == 4);
  CHECK(f->triangle_count() == 3);
  for (const CycleFilling& part : f->parts) {
    CHECK(part.path.size() == 1);
    CHECK(verify_cycle_filling(x, part).ok());
    check_disk(part);
  }

  CHECK_FALSE(fill_three_cycle(KComplex(6, 2, {}), 1, 2, 3).has_value());
}

TEST_CASE("complete and empty complexes", "[fillable]") {
  for (int n = 5; n <= 12; ++n) {
    const FillabilityReport r = all_three_cycles_fillable(make_complete_complex(n, 2));
    CHECK(r.fillable);
    CHECK(r.min_good_set == static_cast<std::size_t>(n - 2));
    CHECK(r.cycles_checked == static_cast<std::size_t>(binomial(n, 3)));
  }
  const FillabilityReport e = all_three_cycles_fillable(KComplex(8, 2, {}));
  CHECK_FALSE(e.fillable);
  REQUIRE(e.failing_cycle.has_value());
  CHECK(*e.failing_cycle == std::array<int, 3>{1, 2, 3});
  CHECK(e.min_good_set == 0);
}

TEST_CASE("bitset good sets agree with the graph route", "[fillable][property]") {
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 70 + 5 * trial;  // crosses a word boundary
    const KComplex x = sample_complex(RandomParams::from_c(n, 2, 2.0 + trial, rng::derive_trial_seed(40, trial)));
    const EdgeLinkTable links(x);
    const GoodSetTable table(links, 1);
    for (int a = 1; a <= n; a += 7)
      for (int b = a + 1; b <= n; b += 5) {
        const GoodSetReport r = good_set(x, a, b);
        REQUIRE(table.good(a, b) == r.good);
        REQUIRE(table.largest_component_size(a, b) == r.largest_component_size);
      }
    // Cycle verdicts agree with fill_three_cycle.
    FillabilityOptions opts;
    int visited = 0;
    opts.on_cycle = [&](const CycleStatus& st) {
      if (visited++ % 97 != 0) return;
      const auto f = fill_three_cycle(x, st.cycle[0], st.cycle[1], st.cycle[2]);
      REQUIRE(f.has_value() == st.filled());
      if (f && f->hub) CHECK(f->hub == st.hub);
    };
    (void)all_three_cycles_fillable(x, opts);
  }
}

TEST_CASE("every cycle filling is a disk with 2m+1 triangles", "[filling][property]") {
  const int n = 120;
  const KComplex x = sample_complex(RandomParams::from_c(n, 2, preset_c(3, 2), 5));
  int filled = 0;
  for (int a = 1; a <= 12; ++a)
    for (int b = a + 1; b <= 14; ++b)
      for (int c = b + 1; c <= 16; c += 3) {
        const auto f = fill_three_cycle(x, a, b, c);
        if (!f || !f->hub) continue;
        ++filled;
        REQUIRE(f->parts.size() == 3);
        for (const CycleFilling& part : f->parts) {
          CHECK(verify_cycle_filling(x, part).ok());
          check_disk(part);
        }
      }
  CHECK(filled > 0);
}

TEST_CASE("fillings persist in supercomplexes", "[filling][coupling]") {
  const int n = 100;
  const KComplex lo = sample_complex(RandomParams::from_c(n, 2, 3.3, 9));
  const KComplex hi = sample_complex(RandomParams::from_c(n, 2, 6.0, 9));
  int checked = 0;
  for (int c = 3; c <= 40; ++c) {
    const auto f = fill_three_cycle(lo, 1, 2, c);
    if (!f) continue;
    for (const CycleFilling& part : f->parts) CHECK(verify_cycle_filling(hi, part).ok());
    ++checked;
  }
  CHECK(checked > 0);
  if (all_three_cycles_fillable(lo).fillable) CHECK(all_three_cycles_fillable(hi).fillable);
}

TEST_CASE("threaded good sets are identical", "[fillable][concurrency]") {
  const KComplex x = sample_complex(RandomParams::from_c(150, 2, 3.3, 4));
  const FillabilityReport one = all_three_cycles_fillable(x, {1, {}});
  const FillabilityReport four = all_three_cycles_fillable(x, {4, {}});
  CHECK(one.fillable == four.fillable);
  CHECK(one.min_good_set == four.min_good_set);
  CHECK(one.failing_cycle == four.failing_cycle);
  CHECK(one.cycles_checked == four.cycles_checked);
}
