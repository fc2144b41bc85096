#pragma once

// Slow reference implementations. Each one recomputes its answer from the
// definitions with no shared fast paths, and each refuses inputs above a hard
// size guard instead of truncating.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/error.hpp"
#include "mincplx/graph.hpp"
#include "mincplx/surface_census.hpp"

namespace mincplx::oracle {

inline constexpr int kMaxCommonLinkVertices = 15;
inline constexpr int kMaxMinorVertices = 14;
inline constexpr int kMaxMinorBranches = 4;
inline constexpr int kMaxBruteSurfaceVertices = 6;

inline Graph brute_common_link(const KComplex& x, const Face& f) {
  if (x.n() > kMaxCommonLinkVertices)
    throw Error(ErrorCode::size_guard, "brute_common_link supports n <= " + std::to_string(kMaxCommonLinkVertices));
  if (f.size() != static_cast<std::size_t>(x.k()) || (!f.empty() && f.max_vertex() > x.n()))
    throw Error(ErrorCode::invalid_dimension, "base face must have k vertices in [n]");
  const auto listed = x.top_faces();
  const std::set<Face> faces(listed.begin(), listed.end());
  std::vector<int> rest;
  for (int v = 1; v <= x.n(); ++v)
    if (!f.contains(v)) rest.push_back(v);
  std::vector<std::pair<int, int>> edges;
  for (int u : rest)
    for (int v : rest) {
      if (v <= u) continue;
      bool all = true;
      for (const Face& h : f.subfaces(f.size() - 1)) {
        std::vector<int> verts(h.vertices().begin(), h.vertices().end());
        verts.push_back(u);
        verts.push_back(v);
        if (!faces.count(Face::from_unsorted(verts))) {
          all = false;
          break;
        }
      }
      if (all) edges.emplace_back(u, v);
    }
  return Graph(x.n(), std::move(rest), std::move(edges));
}

namespace detail {

// Triangle membership as a dense cube, filled from the face enumeration.
class TriangleCube {
 public:
  explicit TriangleCube(const KComplex& x) : n_(x.n()), bits_(static_cast<std::size_t>(n_ + 1) * (n_ + 1) * (n_ + 1), 0) {
    x.for_each_top_face([&](std::span<const int> f) {
      const int v[3] = {f[0], f[1], f[2]};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l)
            if (i != j && j != l && i != l) bits_[index(v[i], v[j], v[l])] = 1;
    });
  }
  bool has(int a, int b, int c) const { return bits_[index(a, b, c)] != 0; }

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * (n_ + 1) + b) * (n_ + 1) + c;
  }
  int n_;
  std::vector<unsigned char> bits_;
};

// All path-vertex sets (bitmasks over [n], bit v-1) of fillings of {a,b1,b2}
// with apex a, paths avoiding `forbidden`, m <= max_len; only inclusion-minimal
// sets are kept, since a superset can never help with disjointness.
inline std::vector<std::uint32_t> filling_masks(const TriangleCube& cube, int n, int a, int b1, int b2,
                                                std::uint32_t forbidden, int max_len) {
  std::vector<std::uint32_t> found;
  if (cube.has(a, b1, b2)) return {0U};
  auto linked = [&](int u, int v) { return cube.has(u, v, b1) && cube.has(u, v, b2); };
  // reached[end] holds the masks of simple paths from a start vertex to `end`.
  std::vector<std::set<std::uint32_t>> layer(static_cast<std::size_t>(n) + 1);
  for (int w = 1; w <= n; ++w)
    if (!(forbidden >> (w - 1) & 1U) && linked(a, w)) layer[w].insert(1U << (w - 1));
  for (int step = 0; step <= max_len; ++step) {
    std::vector<std::set<std::uint32_t>> next(static_cast<std::size_t>(n) + 1);
    bool any = false;
    for (int end = 1; end <= n; ++end)
      for (std::uint32_t mask : layer[end]) {
        if (cube.has(b1, b2, end)) found.push_back(mask);
        if (step == max_len) continue;
        for (int w = 1; w <= n; ++w) {
          const std::uint32_t bit = 1U << (w - 1);
          if ((forbidden | mask) & bit || !linked(end, w)) continue;
          next[w].insert(mask | bit);
          any = true;
        }
      }
    if (!any) break;
    layer = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](std::uint32_t l, std::uint32_t r) {
    return std::popcount(l) != std::popcount(r) ? std::popcount(l) < std::popcount(r) : l < r;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : found)
    if (std::none_of(minimal.begin(), minimal.end(), [&](std::uint32_t s) { return (s & m) == s; })) minimal.push_back(m);
  return minimal;
}

inline bool choose_disjoint(const std::vector<std::vector<std::uint32_t>>& options, std::size_t i, std::uint32_t used) {
  if (i == options.size()) return true;
  for (std::uint32_t m : options[i])
    if (!(m & used) && choose_disjoint(options, i + 1, used | m)) return true;
  return false;
}

}  // namespace detail

/// True iff X contains a K_t^2 subdivision of the shape the finder builds:
/// every triangle of the branch set is filled either by itself or by a
/// two-fan disk around a path with at most max_path_len edges, with paths
/// pairwise vertex-disjoint and avoiding branch vertices. No vertex partition
/// is imposed, so this accepts everything the finder accepts.
inline bool exhaustive_structured_minor_search(const KComplex& x, int t, int max_path_len) {
  if (x.k() != 2) throw Error(ErrorCode::unsupported_dimension, "structured minor oracle needs k = 2");
  if (x.n() > kMaxMinorVertices) throw Error(ErrorCode::size_guard, "structured minor oracle supports n <= 14");
  if (t < 3 || t > kMaxMinorBranches) throw Error(ErrorCode::size_guard, "structured minor oracle supports 3 <= t <= 4");
  if (max_path_len < 0) throw Error(ErrorCode::invalid_argument, "max_path_len must be non-negative");
  const int n = x.n();
  if (n < t) return false;
  const detail::TriangleCube cube(x);
  // The image set is all that matters: every triple of branch vertices is some f(sigma).
  bool hit = false;
  for_each_combination(n, t, [&](std::span<const int> branch) {
    std::uint32_t forbidden = 0;
    for (int b : branch) forbidden |= 1U << (b - 1);
    std::vector<std::vector<std::uint32_t>> options;
    bool feasible = true;
    for_each_combination(t, 3, [&](std::span<const int> sigma) {
      const int v[3] = {branch[sigma[0] - 1], branch[sigma[1] - 1], branch[sigma[2] - 1]};
      std::vector<std::uint32_t> masks;
      for (int apex = 0; apex < 3; ++apex) {
        const auto part = detail::filling_masks(cube, n, v[apex], v[(apex + 1) % 3], v[(apex + 2) % 3], forbidden, max_path_len);
        masks.insert(masks.end(), part.begin(), part.end());
      }
      if (masks.empty()) feasible = false;
      options.push_back(std::move(masks));
      return feasible;
    });
    if (feasible && detail::choose_disjoint(options, 0, 0)) hit = true;
    return !hit;
  });
  return hit;
}

/// Every set of `target_f2` triangles on [l] that surface_check accepts as a
/// closed orientable surface using all l vertices, sorted lexicographically.
inline std::vector<std::vector<Triangle>> brute_enumerate_triangulations(int l, int target_f2) {
  if (l < 3 || l > kMaxBruteSurfaceVertices)
    throw Error(ErrorCode::size_guard, "brute triangulation enumeration supports 3 <= l <= 6");
  if (target_f2 < 0) throw Error(ErrorCode::invalid_argument, "target face count must be non-negative");
  std::vector<Triangle> all;
  for_each_combination(l, 3, [&](std::span<const int> f) { all.push_back({f[0], f[1], f[2]}); });
  std::vector<std::vector<Triangle>> out;
  if (target_f2 == 0 || static_cast<std::size_t>(target_f2) > all.size()) return out;
  for_each_combination(static_cast<int>(all.size()), target_f2, [&](std::span<const int> pick) {
    std::vector<Triangle> tris;
    for (int i : pick) tris.push_back(all[static_cast<std::size_t>(i) - 1]);
    const auto r = surface_check(tris);
    if (r.is_closed_surface && r.orientable && r.vertex_count == static_cast<std::size_t>(l)) out.push_back(std::move(tris));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mincplx::oracle
