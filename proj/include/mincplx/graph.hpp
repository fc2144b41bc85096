#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/error.hpp"

namespace mincplx {

/// Simple undirected graph on a vertex subset of [n]. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Vertex set [n].
  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {}) : Graph(n, iota_vertices(n), std::move(edges)) {}

  Graph(int n, std::vector<int> vertices, std::vector<std::pair<int, int>> edges)
      : n_(n), vertices_(std::move(vertices)), member_(static_cast<std::size_t>(n) + 1, 0),
        adjacency_(static_cast<std::size_t>(n) + 1) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int v : vertices_) {
      if (v < 1 || v > n_) throw Error(ErrorCode::vertex_out_of_range, "graph vertex " + std::to_string(v) + " outside [1, n]");
      member_[v] = 1;
    }
    for (auto [u, v] : edges) {
      if (u == v) throw Error(ErrorCode::invalid_argument, "graphs have no loops");
      if (u < 1 || v < 1 || u > n_ || v > n_ || !member_[u] || !member_[v])
        throw Error(ErrorCode::vertex_out_of_range, "edge endpoint not a graph vertex");
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edge_count_ += nb.size();
    }
    edge_count_ /= 2;
  }

  int universe() const noexcept { return n_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_vertex(int v) const noexcept { return v >= 1 && v <= n_ && member_[v]; }

  std::span<const int> neighbors(int v) const {
    if (!has_vertex(v)) throw Error(ErrorCode::vertex_out_of_range, "not a graph vertex: " + std::to_string(v));
    return adjacency_[v];
  }

  bool has_edge(int u, int v) const noexcept {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u : vertices_)
      for (int v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.edges() == b.edges();
  }

 private:
  static std::vector<int> iota_vertices(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    return v;
  }

  int n_ = 0;
  std::vector<int> vertices_;
  std::vector<unsigned char> member_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t component_size(std::size_t x) noexcept { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Graph text format: line 1 `n`, then `u v` per edge with u < v, lexicographic.
// The vertex set is taken to be [n].

inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.universe()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph deserialize_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  detail::for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto ints = detail::parse_ints(line);
    if (!ints) throw ParseError(line_no, "expected integers");
    if (!n) {
      if (ints->size() != 1 || (*ints)[0] < 0) throw ParseError(line_no, "header must be `n`");
      n = static_cast<int>((*ints)[0]);
      return;
    }
    if (ints->size() != 2) throw ParseError(line_no, "edge line must be `u v`");
    const long long u = (*ints)[0], v = (*ints)[1];
    if (u < 1 || v > *n || u >= v) throw ParseError(line_no, "edge must satisfy 1 <= u < v <= n");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  });
  if (!n) throw ParseError(0, "missing `n` header");
  return Graph(*n, std::move(edges));
}

}  // namespace mincplx
