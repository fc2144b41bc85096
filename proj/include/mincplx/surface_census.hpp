#pragma once

// Closed-surface recognition for 2-complexes, labeled sphere enumeration on few
// vertices, and the union bound over genus-g triangulations in X^2(n, p).

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/error.hpp"
#include "mincplx/graph.hpp"

namespace mincplx {

using Triangle = std::array<int, 3>;

enum class SurfaceReason { ok, empty, invalid_triangle, duplicate_triangle, edge_degree, vertex_link, disconnected };

inline const char* to_string(SurfaceReason r) {
  switch (r) {
    case SurfaceReason::ok: return "ok";
    case SurfaceReason::empty: return "empty";
    case SurfaceReason::invalid_triangle: return "invalid-triangle";
    case SurfaceReason::duplicate_triangle: return "duplicate-triangle";
    case SurfaceReason::edge_degree: return "edge-degree";
    case SurfaceReason::vertex_link: return "vertex-link";
    case SurfaceReason::disconnected: return "disconnected";
  }
  return "unknown";
}

struct SurfaceCheckResult {
  bool is_closed_surface = false;
  long euler_characteristic = 0;  // V - E + F over the induced vertices and edges
  bool orientable = false;        // only decided for closed surfaces
  std::optional<int> genus;       // (2 - chi) / 2 for closed orientable surfaces
  SurfaceReason reason = SurfaceReason::empty;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t triangle_count = 0;

  friend bool operator==(const SurfaceCheckResult&, const SurfaceCheckResult&) = default;
};

inline SurfaceCheckResult surface_check(std::span<const Triangle> input) {
  SurfaceCheckResult r;
  if (input.empty()) return r;
  std::vector<Triangle> tris;
  tris.reserve(input.size());
  for (Triangle t : input) {
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[0] == t[1] || t[1] == t[2]) {
      r.reason = SurfaceReason::invalid_triangle;
      return r;
    }
    tris.push_back(t);
  }
  std::vector<Triangle> sorted = tris;
  std::sort(sorted.begin(), sorted.end());
  const bool duplicates = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();

  std::map<std::pair<int, int>, std::vector<std::size_t>> edge_tris;
  std::map<int, std::vector<std::pair<int, int>>> vertex_links;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto [a, b, c] = tris[i];
    edge_tris[{a, b}].push_back(i);
    edge_tris[{a, c}].push_back(i);
    edge_tris[{b, c}].push_back(i);
    vertex_links[a].emplace_back(b, c);
    vertex_links[b].emplace_back(a, c);
    vertex_links[c].emplace_back(a, b);
  }
  r.vertex_count = vertex_links.size();
  r.edge_count = edge_tris.size();
  r.triangle_count = tris.size();
  r.euler_characteristic = static_cast<long>(r.vertex_count) - static_cast<long>(r.edge_count) + static_cast<long>(r.triangle_count);
  if (duplicates) {
    r.reason = SurfaceReason::duplicate_triangle;
    return r;
  }
  for (const auto& [e, ts] : edge_tris)
    if (ts.size() != 2) {
      r.reason = SurfaceReason::edge_degree;
      return r;
    }
  // With every edge in two triangles each link is 2-regular; it is a single cycle iff connected.
  for (const auto& [v, edges] : vertex_links) {
    std::map<int, std::size_t> id;
    for (auto [x, y] : edges) {
      id.emplace(x, id.size());
      id.emplace(y, id.size());
    }
    UnionFind uf(id.size());
    std::size_t merges = 0;
    for (auto [x, y] : edges) merges += uf.unite(id[x], id[y]);
    if (merges + 1 != id.size()) {
      r.reason = SurfaceReason::vertex_link;
      return r;
    }
  }
  // Orientation propagation over the dual graph: neighbors must traverse the
  // shared edge in opposite directions.
  std::vector<int> sign(tris.size(), 0);  // +1: (a,b,c) as sorted, -1: reversed
  auto traverses = [&](std::size_t i, int u, int v) {
    // +1 if triangle i, with its orientation, runs u -> v.
    const auto& t = tris[i];
    int pos_u = 0, pos_v = 0;
    for (int j = 0; j < 3; ++j) {
      if (t[j] == u) pos_u = j;
      if (t[j] == v) pos_v = j;
    }
    const int forward = (pos_v - pos_u + 3) % 3 == 1 ? 1 : -1;
    return forward * sign[i];
  };
  bool orientable = true;
  std::size_t reached = 0;
  std::vector<std::size_t> stack{0};
  sign[0] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++reached;
    const auto& t = tris[i];
    for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
      for (std::size_t j : edge_tris[{u, v}]) {
        if (j == i) continue;
        const int dir_i = traverses(i, u, v);
        if (sign[j] == 0) {
          sign[j] = 1;
          if (traverses(j, u, v) == dir_i) sign[j] = -1;
          stack.push_back(j);
        } else if (traverses(j, u, v) == dir_i) {
          orientable = false;
        }
      }
    }
  }
  if (reached != tris.size()) {
    r.reason = SurfaceReason::disconnected;
    return r;
  }
  r.is_closed_surface = true;
  r.reason = SurfaceReason::ok;
  r.orientable = orientable;
  if (orientable) r.genus = static_cast<int>((2 - r.euler_characteristic) / 2);
  return r;
}

inline SurfaceCheckResult surface_check(const KComplex& x) {
  if (x.k() != 2) throw Error(ErrorCode::unsupported_dimension, "surface_check needs a 2-complex");
  std::vector<Triangle> tris;
  x.for_each_top_face([&](std::span<const int> f) { tris.push_back({f[0], f[1], f[2]}); });
  return surface_check(tris);
}

/// f_2 = 2(l - 2 + 2g) for a closed orientable genus-g triangulation on l vertices.
inline long euler_face_count(long l, long g) {
  if (l < 3 || g < 0) throw Error(ErrorCode::invalid_argument, "euler_face_count needs l >= 3 and g >= 0");
  return 2 * (l - 2 + 2 * g);
}

inline constexpr int kMaxEnumerationVertices = 7;

/// All labeled triangulations of the 2-sphere with vertex set [l], each as a
/// sorted triangle list; the list itself is sorted lexicographically.
///
/// Closure search: start from the smallest triangle T0 (it contains vertex 1),
/// repeatedly take the smallest edge lying in one chosen triangle and branch
/// over its second triangle, using only triangles above T0 and keeping every
/// edge in at most two triangles. Each surface is reached along exactly one branch.
inline std::vector<std::vector<Triangle>> enumerate_sphere_triangulations(int l) {
  if (l < 3 || l > kMaxEnumerationVertices)
    throw Error(ErrorCode::size_guard, "sphere enumeration supports 3 <= l <= " + std::to_string(kMaxEnumerationVertices));
  const std::size_t target = static_cast<std::size_t>(euler_face_count(l, 0));
  std::vector<std::vector<Triangle>> out;
  std::vector<std::vector<int>> degree(static_cast<std::size_t>(l) + 1, std::vector<int>(static_cast<std::size_t>(l) + 1, 0));
  std::set<Triangle> chosen;
  Triangle first{};

  auto bump = [&](const Triangle& t, int d) {
    degree[t[0]][t[1]] += d;
    degree[t[0]][t[2]] += d;
    degree[t[1]][t[2]] += d;
  };
  auto recurse = [&](auto&& self) -> void {
    if (chosen.size() > target) return;
    std::optional<std::pair<int, int>> open;
    for (int a = 1; a <= l && !open; ++a)
      for (int b = a + 1; b <= l; ++b)
        if (degree[a][b] == 1) {
          open = {a, b};
          break;
        }
    if (!open) {
      if (chosen.size() != target) return;
      std::vector<Triangle> tris(chosen.begin(), chosen.end());
      const auto res = surface_check(tris);
      if (res.is_closed_surface && res.genus == 0 && res.vertex_count == static_cast<std::size_t>(l)) out.push_back(tris);
      return;
    }
    const auto [a, b] = *open;
    for (int w = 1; w <= l; ++w) {
      if (w == a || w == b) continue;
      Triangle t{a, b, w};
      std::sort(t.begin(), t.end());
      if (t <= first || chosen.count(t)) continue;
      if (degree[t[0]][t[1]] >= 2 || degree[t[0]][t[2]] >= 2 || degree[t[1]][t[2]] >= 2) continue;
      chosen.insert(t);
      bump(t, 1);
      self(self);
      bump(t, -1);
      chosen.erase(t);
    }
  };
  for (int b = 2; b <= l; ++b)
    for (int c = b + 1; c <= l; ++c) {
      first = {1, b, c};
      chosen = {first};
      bump(first, 1);
      recurse(recurse);
      bump(first, -1);
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct BoundParams {
  long n = 0;
  double c = 0.0;
  double K = 21.0;  // base of the triangulation count bound tau_g(l) <= K^l
  int genus = 2;
};

namespace detail {

inline void check_bound_params(const BoundParams& p) {
  if (p.n < 1) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (p.c < 0.0 || p.K <= 0.0) throw Error(ErrorCode::invalid_argument, "need c >= 0 and K > 0");
  if (p.genus < 1) throw Error(ErrorCode::invalid_argument, "genus must be at least 1");
  if (p.c * p.K == 1.0) throw Error(ErrorCode::singular, "cK = 1 is the geometric-series singularity");
}

}  // namespace detail

/// (c/n)^(2g-2) * ((1 - (cK)^(n+1)) / (1 - cK) - 1); evaluated as
/// r (1 - r^n) / (1 - r), r = cK, with expm1 for 1 - r^n.
inline double union_bound_closed_form(const BoundParams& p) {
  detail::check_bound_params(p);
  const double r = p.c * p.K;
  if (r == 0.0) return 0.0;
  const double one_minus_rn = -std::expm1(static_cast<double>(p.n) * std::log(r));
  const double series = r * one_minus_rn / (1.0 - r);
  return std::pow(p.c / static_cast<double>(p.n), 2.0 * p.genus - 2.0) * series;
}

/// Sum over l = 1..n of K^l n^l p^(2(l - 2 + 2g)) with p = sqrt(c/n), compensated summation.
inline double union_bound_direct_sum(const BoundParams& p) {
  detail::check_bound_params(p);
  const double prob = std::sqrt(p.c / static_cast<double>(p.n));
  const double step = p.K * static_cast<double>(p.n) * prob * prob;
  double term = std::pow(prob, 2.0 * (2 * p.genus - 2));  // l = 0, not summed
  double sum = 0.0, carry = 0.0;
  for (long l = 1; l <= p.n; ++l) {
    term *= step;
    const double y = term - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
    if (term == 0.0) break;
  }
  return sum;
}

}  // namespace mincplx
