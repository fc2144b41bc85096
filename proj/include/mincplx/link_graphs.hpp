#pragma once

// Common-link graphs G_F, induced subgraphs, components and shortest paths.

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/graph.hpp"

namespace mincplx {

/// True iff {x, y} u H is a k-face of X for every H in (F choose k-1).
/// F must be a sorted k-set; x, y distinct and outside F.
inline bool in_common_link(const KComplex& x_complex, std::span<const int> base, int x, int y) {
  const std::size_t k = base.size();
  if (x > y) std::swap(x, y);
  std::array<int, kMaxDimension + 2> buf{};
  for (std::size_t skip = 0; skip < k; ++skip) {
    std::size_t m = 0;
    bool placed_x = false, placed_y = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == skip) continue;
      const int h = base[i];
      if (!placed_x && x < h) { buf[m++] = x; placed_x = true; }
      if (!placed_y && y < h) { buf[m++] = y; placed_y = true; }
      buf[m++] = h;
    }
    if (!placed_x) buf[m++] = x;
    if (!placed_y) buf[m++] = y;
    if (!x_complex.contains_top(std::span<const int>(buf.data(), m))) return false;
  }
  return true;
}

/// F u {v} in X, for a sorted k-set F and v outside F.
inline bool caps_face(const KComplex& x_complex, std::span<const int> base, int v) {
  std::array<int, kMaxDimension + 2> buf{};
  std::size_t m = 0;
  bool placed = false;
  for (int h : base) {
    if (!placed && v < h) { buf[m++] = v; placed = true; }
    buf[m++] = h;
  }
  if (!placed) buf[m++] = v;
  return x_complex.contains_top(std::span<const int>(buf.data(), m));
}

namespace detail {

inline void check_link_base(const KComplex& x, const Face& f) {
  if (f.size() != static_cast<std::size_t>(x.k()))
    throw Error(ErrorCode::invalid_dimension,
                "common link graph needs a face with k=" + std::to_string(x.k()) + " vertices, got " + f.str());
  if (f.max_vertex() > x.n()) throw Error(ErrorCode::vertex_out_of_range, "face " + f.str() + " outside [n]");
}

}  // namespace detail

/// G_F restricted to `within` (which must avoid F): vertex set `within`.
inline Graph common_link_graph(const KComplex& x, const Face& f, std::span<const int> within) {
  detail::check_link_base(x, f);
  std::vector<int> w(within.begin(), within.end());
  std::sort(w.begin(), w.end());
  for (int v : w)
    if (f.contains(v)) throw Error(ErrorCode::invalid_argument, "vertex set meets the base face");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (in_common_link(x, f.vertices(), w[i], w[j])) edges.emplace_back(w[i], w[j]);
  return Graph(x.n(), std::move(w), std::move(edges));
}

/// G_F on vertex set [n] \ F. For k = 2 and F = {a, b} this is lk(a) n lk(b).
inline Graph common_link_graph(const KComplex& x, const Face& f) {
  detail::check_link_base(x, f);
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(x.n()));
  for (int v = 1; v <= x.n(); ++v)
    if (!f.contains(v)) rest.push_back(v);
  return common_link_graph(x, f, rest);
}

inline Graph induced_subgraph(const Graph& g, std::span<const int> subset) {
  std::vector<int> w(subset.begin(), subset.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int v : w)
    if (!g.has_vertex(v)) throw Error(ErrorCode::invalid_argument, "induced_subgraph: " + std::to_string(v) + " is not a vertex");
  std::vector<unsigned char> in(static_cast<std::size_t>(g.universe()) + 1, 0);
  for (int v : w) in[v] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int u : w)
    for (int v : g.neighbors(u))
      if (u < v && in[v]) edges.emplace_back(u, v);
  return Graph(g.universe(), std::move(w), std::move(edges));
}

/// A connected component; `vertices` sorted, representative = smallest vertex.
struct Component {
  std::vector<int> vertices;

  int representative() const { return vertices.front(); }
  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

  friend bool operator==(const Component&, const Component&) = default;
};

/// Components of G[W], ordered by smallest vertex.
inline std::vector<Component> connected_components(const Graph& g, std::span<const int> subset) {
  std::vector<int> w(subset.begin(), subset.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<int> index(static_cast<std::size_t>(g.universe()) + 1, -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!g.has_vertex(w[i])) throw Error(ErrorCode::invalid_argument, "component query outside the graph");
    index[w[i]] = static_cast<int>(i);
  }
  UnionFind uf(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int v : g.neighbors(w[i]))
      if (index[v] > static_cast<int>(i)) uf.unite(i, static_cast<std::size_t>(index[v]));
  std::vector<int> slot(w.size(), -1);
  std::vector<Component> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].vertices.push_back(w[i]);
  }
  return out;
}

inline std::vector<Component> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

/// Largest component of G[W]; among equal sizes the one holding the smallest vertex.
inline Component largest_component(const Graph& g, std::span<const int> subset) {
  if (subset.empty()) throw Error(ErrorCode::invalid_argument, "largest_component of an empty vertex set");
  auto comps = connected_components(g, subset);
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  return std::move(comps[best]);
}

inline Component largest_component(const Graph& g) { return largest_component(g, g.vertices()); }

/// Breadth-first search visiting neighbors in increasing order; the first
/// discovery fixes each parent, so the path is shortest and reproducible.
inline std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to) {
  if (!g.has_vertex(from) || !g.has_vertex(to))
    throw Error(ErrorCode::invalid_argument, "shortest_path endpoints must be graph vertices");
  if (from == to) return std::vector<int>{from};
  std::vector<int> parent(static_cast<std::size_t>(g.universe()) + 1, 0);
  parent[from] = from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (parent[v]) continue;
      parent[v] = u;
      if (v == to) {
        std::vector<int> path{to};
        for (int x = to; x != from;) path.push_back(x = parent[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace mincplx
