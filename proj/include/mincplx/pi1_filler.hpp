#pragma once

// Filling 3-cycles of a 2-complex with triangulated disks.
//
// A vertex x is good for the pair {a, b} if x shares a component of
// G_{a,b} = lk(a) n lk(b) with some y such that {a, b, y} is a triangle. A
// path x = u_0 ... u_m = y in G_{a,b} then gives the disk
//     {a, u_i, u_i+1}, {b, u_i, u_i+1}  (path edges),   {a, b, y}
// bounded by the cycle {a, b, x}. A vertex good for all three pairs of {a, b, c}
// fills that cycle. Since the 1-skeleton is complete, filling every 3-cycle
// certifies a trivial fundamental group.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/link_graphs.hpp"
#include "mincplx/parallel.hpp"
#include "mincplx/witness.hpp"

namespace mincplx {

namespace detail {

inline void require_two_dimensional(const KComplex& x) {
  if (x.k() != 2) throw Error(ErrorCode::unsupported_dimension, "3-cycle filling needs a 2-complex");
}

inline void require_vertex(const KComplex& x, int v) {
  if (v < 1 || v > x.n()) throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v) + " outside [n]");
}

}  // namespace detail

struct GoodSetReport {
  int a = 0;
  int b = 0;
  std::vector<int> good;  // S_{a,b}, sorted
  std::size_t largest_component_size = 0;

  bool contains(int v) const { return std::binary_search(good.begin(), good.end(), v); }
};

inline GoodSetReport good_set(const KComplex& x, int a, int b) {
  detail::require_two_dimensional(x);
  detail::require_vertex(x, a);
  detail::require_vertex(x, b);
  if (a == b) throw Error(ErrorCode::invalid_argument, "good_set needs two distinct vertices");
  const Face pair = Face::from_unsorted({a, b});
  const Graph g = common_link_graph(x, pair);
  GoodSetReport r{pair[0], pair[1], {}, 0};
  for (const Component& c : connected_components(g)) {
    r.largest_component_size = std::max(r.largest_component_size, c.size());
    const bool has_cap = std::any_of(c.vertices.begin(), c.vertices.end(),
                                     [&](int y) { return caps_face(x, pair.vertices(), y); });
    if (has_cap) r.good.insert(r.good.end(), c.vertices.begin(), c.vertices.end());
  }
  std::sort(r.good.begin(), r.good.end());
  return r;
}

/// Disk bounded by {a, b, x}, built from a path x ... y in G_{a,b} and the triangle {a, b, y}.
struct CycleFilling {
  int a = 0;
  int b = 0;
  int x = 0;
  int y = 0;
  std::vector<int> path;  // x = u_0 ... u_m = y
  std::vector<Face> triangles;

  Face cycle() const { return Face::from_unsorted({a, b, x}); }
  std::size_t path_length() const noexcept { return path.empty() ? 0 : path.size() - 1; }
};

inline std::vector<Face> cycle_filling_triangles(int a, int b, const std::vector<int>& path) {
  std::vector<Face> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(Face::from_unsorted({a, path[i], path[i + 1]}));
    out.push_back(Face::from_unsorted({b, path[i], path[i + 1]}));
  }
  out.push_back(Face::from_unsorted({a, b, path.back()}));
  return out;
}

inline Verdict verify_cycle_filling(const KComplex& x, const CycleFilling& f) {
  if (x.k() != 2) return Verdict::fail(VerifyReason::bad_structure, "not a 2-complex");
  if (f.path.empty() || f.path.front() != f.x || f.path.back() != f.y)
    return Verdict::fail(VerifyReason::bad_structure, "path must run from x to y");
  std::vector<int> seen{f.a, f.b};
  for (int u : f.path) {
    if (u < 1 || u > x.n()) return Verdict::fail(VerifyReason::bad_structure, "vertex outside [n]");
    if (std::find(seen.begin(), seen.end(), u) != seen.end())
      return Verdict::fail(VerifyReason::bad_structure, "path repeats a vertex or meets the pair");
    seen.push_back(u);
  }
  if (f.a == f.b || f.a < 1 || f.b < 1 || f.a > x.n() || f.b > x.n())
    return Verdict::fail(VerifyReason::bad_structure, "invalid pair");
  const auto expected = cycle_filling_triangles(f.a, f.b, f.path);
  if (std::set<Face>(expected.begin(), expected.end()) != std::set<Face>(f.triangles.begin(), f.triangles.end()) ||
      f.triangles.size() != 2 * f.path_length() + 1)
    return Verdict::fail(VerifyReason::bad_structure, "triangle list does not match the filling formula");
  for (const Face& t : f.triangles)
    if (!x.contains(t)) return Verdict::fail(VerifyReason::missing_face, "triangle " + t.str() + " not in complex");
  return check_triangulated_disk(f.triangles, f.cycle());
}

/// Fills {a, b, x} using pair {a, b}: breadth-first from x to the nearest y with
/// {a, b, y} in X. Absent when x is not good for {a, b}.
inline std::optional<CycleFilling> fill_cycle_via_pair(const KComplex& x_complex, const Graph& link_ab, int a, int b, int x) {
  const Face pair = Face::from_unsorted({a, b});
  std::vector<int> parent(static_cast<std::size_t>(x_complex.n()) + 1, 0);
  std::deque<int> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (caps_face(x_complex, pair.vertices(), u)) {
      std::vector<int> path{u};
      for (int v = u; v != x;) path.push_back(v = parent[v]);
      std::reverse(path.begin(), path.end());
      CycleFilling f{a, b, x, u, path, cycle_filling_triangles(a, b, path)};
      return f;
    }
    for (int v : link_ab.neighbors(u))
      if (!parent[v]) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  return std::nullopt;
}

struct ThreeCycleFilling {
  Face cycle;
  std::optional<int> hub;          // x; absent when the cycle is itself a triangle
  std::vector<CycleFilling> parts;  // fillings of {a,b,x}, {a,c,x}, {b,c,x}, or the single triangle

  std::size_t triangle_count() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.triangles.size();
    return n;
  }
};

inline std::optional<ThreeCycleFilling> fill_three_cycle(const KComplex& x, int a, int b, int c) {
  detail::require_two_dimensional(x);
  for (int v : {a, b, c}) detail::require_vertex(x, v);
  const Face cycle = Face::from_unsorted({a, b, c});
  a = cycle[0];
  b = cycle[1];
  c = cycle[2];
  if (x.contains(cycle)) {
    CycleFilling f{a, b, c, c, {c}, {cycle}};
    return ThreeCycleFilling{cycle, std::nullopt, {std::move(f)}};
  }
  const auto sab = good_set(x, a, b);
  const auto sac = good_set(x, a, c);
  const auto sbc = good_set(x, b, c);
  std::optional<int> hub;
  for (int v : sab.good)
    if (sac.contains(v) && sbc.contains(v)) {
      hub = v;
      break;
    }
  if (!hub) return std::nullopt;
  ThreeCycleFilling out{cycle, hub, {}};
  for (auto [p, q] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
    const Graph g = common_link_graph(x, Face{p, q});
    auto f = fill_cycle_via_pair(x, g, p, q, *hub);
    if (!f) throw std::logic_error("good vertex without a filling path");
    out.parts.push_back(std::move(*f));
  }
  return out;
}

/// For every pair {a, b} of a 2-complex, the bitset of y with {a, b, y} in X.
class EdgeLinkTable {
 public:
  explicit EdgeLinkTable(const KComplex& x) : n_(x.n()), words_((static_cast<std::size_t>(x.n()) + 64) / 64) {
    detail::require_two_dimensional(x);
    bits_.assign(pair_count() * words_, 0);
    x.for_each_top_face([&](std::span<const int> f) {
      set(f[0], f[1], f[2]);
      set(f[0], f[2], f[1]);
      set(f[1], f[2], f[0]);
    });
  }

  int n() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  std::size_t pair_index(int a, int b) const noexcept {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(b - 1) * static_cast<std::size_t>(b - 2) / 2 + static_cast<std::size_t>(a - 1);
  }

  std::size_t pair_count() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(n_ - 1, 0)) / 2;
  }

  const std::uint64_t* row(int a, int b) const noexcept { return bits_.data() + pair_index(a, b) * words_; }

  bool has(int a, int b, int y) const noexcept {
    const std::uint64_t* r = row(a, b);
    return (r[y >> 6] >> (y & 63)) & 1U;
  }

 private:
  void set(int a, int b, int y) noexcept {
    bits_[pair_index(a, b) * words_ + (static_cast<std::size_t>(y) >> 6)] |= std::uint64_t{1} << (y & 63);
  }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Good sets of every pair as bitsets over vertex ids, computed from an EdgeLinkTable.
class GoodSetTable {
 public:
  GoodSetTable(const EdgeLinkTable& links, unsigned threads = 1)
      : links_(links), bits_(links.pair_count() * links.words(), 0), good_size_(links.pair_count(), 0),
        lcc_size_(links.pair_count(), 0) {
    const int n = links.n();
    parallel_for(static_cast<std::size_t>(std::max(n - 1, 0)), threads, [&](std::size_t i) {
      const int b = static_cast<int>(i) + 2;
      std::vector<std::uint64_t> scratch(3 * links_.words());
      for (int a = 1; a < b; ++a) compute(a, b, scratch);
    });
  }

  const std::uint64_t* row(int a, int b) const noexcept { return bits_.data() + links_.pair_index(a, b) * links_.words(); }

  std::size_t good_size(int a, int b) const noexcept { return good_size_[links_.pair_index(a, b)]; }
  std::size_t largest_component_size(int a, int b) const noexcept { return lcc_size_[links_.pair_index(a, b)]; }

  std::vector<int> good(int a, int b) const {
    std::vector<int> out;
    const std::uint64_t* r = row(a, b);
    for (std::size_t w = 0; w < links_.words(); ++w)
      for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
    return out;
  }

 private:
  void compute(int a, int b, std::vector<std::uint64_t>& scratch) {
    const std::size_t words = links_.words();
    std::uint64_t* unvisited = scratch.data();
    std::uint64_t* comp = scratch.data() + words;
    std::uint64_t* frontier_bits = scratch.data() + 2 * words;
    std::fill(unvisited, unvisited + words, 0);
    for (int v = 1; v <= links_.n(); ++v)
      if (v != a && v != b) unvisited[v >> 6] |= std::uint64_t{1} << (v & 63);
    const std::uint64_t* caps = links_.row(a, b);
    std::uint64_t* good = bits_.data() + links_.pair_index(a, b) * words;
    std::vector<int> stack;
    std::size_t good_count = 0, largest = 0;
    for (std::size_t w0 = 0; w0 < words; ++w0) {
      while (unvisited[w0]) {
        const int start = static_cast<int>(w0 * 64 + static_cast<unsigned>(std::countr_zero(unvisited[w0])));
        std::fill(comp, comp + words, 0);
        unvisited[start >> 6] &= ~(std::uint64_t{1} << (start & 63));
        comp[start >> 6] |= std::uint64_t{1} << (start & 63);
        std::size_t size = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          const std::uint64_t* la = links_.row(a, u);
          const std::uint64_t* lb = links_.row(b, u);
          for (std::size_t w = 0; w < words; ++w) {
            frontier_bits[w] = la[w] & lb[w] & unvisited[w];
            unvisited[w] &= ~frontier_bits[w];
            comp[w] |= frontier_bits[w];
            for (std::uint64_t bits = frontier_bits[w]; bits; bits &= bits - 1) {
              stack.push_back(static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
              ++size;
            }
          }
        }
        largest = std::max(largest, size);
        bool capped = false;
        for (std::size_t w = 0; w < words && !capped; ++w) capped = (comp[w] & caps[w]) != 0;
        if (capped) {
          for (std::size_t w = 0; w < words; ++w) good[w] |= comp[w];
          good_count += size;
        }
      }
    }
    good_size_[links_.pair_index(a, b)] = good_count;
    lcc_size_[links_.pair_index(a, b)] = largest;
  }

  const EdgeLinkTable& links_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> good_size_;
  std::vector<std::size_t> lcc_size_;
};

struct CycleStatus {
  std::array<int, 3> cycle{};
  bool is_face = false;
  std::optional<int> hub;

  bool filled() const noexcept { return is_face || hub.has_value(); }
};

struct FillabilityReport {
  bool fillable = true;
  std::optional<std::array<int, 3>> failing_cycle;  // first in lexicographic order
  std::size_t min_good_set = 0;                     // min |S_{a,b}| over all pairs
  std::size_t cycles_checked = 0;
  std::size_t pair12_component = 0;  // largest component of G_{1,2}, a tracked sample pair
};

struct FillabilityOptions {
  unsigned threads = 1;
  /// Called for every cycle in lexicographic order; when set, all cycles are visited.
  std::function<void(const CycleStatus&)> on_cycle;
};

/// Checks every 3-cycle of a 2-complex. fillable = true certifies pi_1(X) = 0.
inline FillabilityReport all_three_cycles_fillable(const KComplex& x, const FillabilityOptions& options = {}) {
  detail::require_two_dimensional(x);
  const EdgeLinkTable links(x);
  const GoodSetTable good(links, options.threads);
  FillabilityReport report;
  const int n = x.n();
  if (n >= 2) {
    report.pair12_component = good.largest_component_size(1, 2);
    report.min_good_set = static_cast<std::size_t>(n);
    for (int b = 2; b <= n; ++b)
      for (int a = 1; a < b; ++a) report.min_good_set = std::min(report.min_good_set, good.good_size(a, b));
  }
  const std::size_t words = links.words();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const std::uint64_t* sab = good.row(a, b);
      for (int c = b + 1; c <= n; ++c) {
        ++report.cycles_checked;
        CycleStatus st{{a, b, c}, links.has(a, b, c), std::nullopt};
        if (!st.is_face) {
          const std::uint64_t* sac = good.row(a, c);
          const std::uint64_t* sbc = good.row(b, c);
          for (std::size_t w = 0; w < words; ++w)
            if (const std::uint64_t m = sab[w] & sac[w] & sbc[w]) {
              st.hub = static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(m)));
              break;
            }
        }
        if (options.on_cycle) options.on_cycle(st);
        if (!st.filled() && report.fillable) {
          report.fillable = false;
          report.failing_cycle = st.cycle;
          if (!options.on_cycle) return report;
        }
      }
    }
  return report;
}

}  // namespace mincplx
