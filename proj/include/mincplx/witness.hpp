#pragma once

// Structured subdivisions of K_t^k: disk fillings of k-spheres, minor
// witnesses, their verification and the witness text format.
//
// A filling of the sphere spanned by {a} u F (|F| = k) along a path
// w_0 ... w_m consists of the k-faces
//
//     e u H          for every path edge e and H in (F choose k-1)
//     {a, w_0} u H   for H in (F choose k-1)
//     F u {w_m}
//
// which is mk + k + 1 faces. The path starts next to the apex (w = w_0) and
// ends at the cap vertex (v = w_m).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/graph.hpp"

namespace mincplx {

enum class VerifyReason {
  ok,
  missing_face,
  bad_structure,
  not_a_disk,
  not_injective,
  boundary_mismatch,
  shared_internal_vertex,
};

inline const char* to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::ok: return "ok";
    case VerifyReason::missing_face: return "missing-face";
    case VerifyReason::bad_structure: return "bad-structure";
    case VerifyReason::not_a_disk: return "not-a-disk";
    case VerifyReason::not_injective: return "not-injective";
    case VerifyReason::boundary_mismatch: return "boundary-mismatch";
    case VerifyReason::shared_internal_vertex: return "shared-internal-vertex";
  }
  return "unknown";
}

/// Outcome of a certificate check. Converts to true only for `ok`.
struct Verdict {
  VerifyReason reason = VerifyReason::ok;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(VerifyReason r, std::string d) { return {r, std::move(d)}; }

  bool ok() const noexcept { return reason == VerifyReason::ok; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Topological disk test for a 2-complex bounded by a 3-cycle: boundary edges
/// lie in exactly one triangle, all other edges in exactly two, every vertex
/// link is connected, and V - E + F = 1.
inline Verdict check_triangulated_disk(const std::vector<Face>& triangles, const Face& boundary) {
  if (boundary.size() != 3) return Verdict::fail(VerifyReason::bad_structure, "boundary must be a 3-cycle");
  std::set<Face> distinct(triangles.begin(), triangles.end());
  if (distinct.size() != triangles.size()) return Verdict::fail(VerifyReason::not_a_disk, "repeated triangle");
  std::map<std::pair<int, int>, int> edge_degree;
  std::set<int> verts(boundary.vertices().begin(), boundary.vertices().end());
  std::map<int, std::vector<std::pair<int, int>>> links;
  for (const Face& t : triangles) {
    if (t.size() != 3) return Verdict::fail(VerifyReason::bad_structure, "filling face is not a triangle");
    const int a = t[0], b = t[1], c = t[2];
    ++edge_degree[{a, b}];
    ++edge_degree[{a, c}];
    ++edge_degree[{b, c}];
    verts.insert({a, b, c});
    links[a].emplace_back(b, c);
    links[b].emplace_back(a, c);
    links[c].emplace_back(a, b);
  }
  for (const Face& e : boundary.subfaces(2)) {
    const auto it = edge_degree.find({e[0], e[1]});
    if (it == edge_degree.end() || it->second != 1)
      return Verdict::fail(VerifyReason::not_a_disk, "boundary edge " + e.str() + " not in exactly one triangle");
  }
  for (const auto& [e, d] : edge_degree) {
    const bool on_boundary = boundary.contains(e.first) && boundary.contains(e.second);
    if (!on_boundary && d != 2)
      return Verdict::fail(VerifyReason::not_a_disk, "interior edge {" + std::to_string(e.first) + "," +
                                                         std::to_string(e.second) + "} in " + std::to_string(d) +
                                                         " triangles");
  }
  for (const auto& [v, edges] : links) {
    std::map<int, int> id;
    for (auto [x, y] : edges) {
      id.emplace(x, static_cast<int>(id.size()));
      id.emplace(y, static_cast<int>(id.size()));
    }
    UnionFind uf(id.size());
    std::size_t merges = 0;
    for (auto [x, y] : edges) merges += uf.unite(static_cast<std::size_t>(id[x]), static_cast<std::size_t>(id[y]));
    if (merges + 1 != id.size())
      return Verdict::fail(VerifyReason::not_a_disk, "link of vertex " + std::to_string(v) + " is disconnected");
  }
  const long chi = static_cast<long>(verts.size()) - static_cast<long>(edge_degree.size()) + static_cast<long>(triangles.size());
  if (chi != 1) return Verdict::fail(VerifyReason::not_a_disk, "Euler characteristic " + std::to_string(chi) + " != 1");
  return Verdict::pass();
}

struct DiskFilling {
  Face boundary;          // {apex} u base, the k+1 sphere vertices
  int apex = 0;           // a
  Face base;              // F, k vertices
  std::vector<int> path;  // w_0 ... w_m
  std::vector<Face> faces;

  std::size_t path_length() const noexcept { return path.empty() ? 0 : path.size() - 1; }
};

/// Face list of the filling, in construction order. Throws if the inputs overlap.
/// An empty path is the trivial filling: the boundary face on its own.
inline std::vector<Face> disk_filling_faces(int apex, const Face& base, const std::vector<int>& path) {
  if (path.empty()) return {base.with(apex)};
  const std::size_t k = base.size();
  const auto completions = base.subfaces(k - 1);
  std::vector<Face> faces;
  faces.reserve((path.size() - 1) * k + k + 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    for (const Face& h : completions) faces.push_back(h.with(path[i]).with(path[i + 1]));
  for (const Face& h : completions) faces.push_back(h.with(apex).with(path.front()));
  faces.push_back(base.with(path.back()));
  return faces;
}

inline DiskFilling make_disk_filling(int apex, Face base, std::vector<int> path) {
  DiskFilling d;
  d.boundary = base.with(apex);
  d.apex = apex;
  d.faces = disk_filling_faces(apex, base, path);
  d.base = std::move(base);
  d.path = std::move(path);
  return d;
}

/// Structure, then face formula, then membership, then (k = 2) the disk test.
/// For k > 2 only the face formula is checked.
inline Verdict verify_disk_filling(const KComplex& x, const DiskFilling& d) {
  const std::size_t k = static_cast<std::size_t>(x.k());
  if (d.base.size() != k) return Verdict::fail(VerifyReason::bad_structure, "base must have k vertices");
  if (d.apex < 1 || d.apex > x.n() || d.base.max_vertex() > x.n())
    return Verdict::fail(VerifyReason::bad_structure, "boundary vertex outside [n]");
  if (d.base.contains(d.apex)) return Verdict::fail(VerifyReason::bad_structure, "apex lies in the base");
  if (d.boundary != d.base.with(d.apex)) return Verdict::fail(VerifyReason::bad_structure, "boundary != base + apex");
  std::set<int> seen;
  for (int w : d.path) {
    if (w < 1 || w > x.n()) return Verdict::fail(VerifyReason::bad_structure, "path vertex outside [n]");
    if (d.boundary.contains(w)) return Verdict::fail(VerifyReason::bad_structure, "path meets the boundary");
    if (!seen.insert(w).second) return Verdict::fail(VerifyReason::bad_structure, "path repeats a vertex");
  }
  const auto expected = disk_filling_faces(d.apex, d.base, d.path);
  if (std::set<Face>(expected.begin(), expected.end()) != std::set<Face>(d.faces.begin(), d.faces.end()) ||
      expected.size() != d.faces.size())
    return Verdict::fail(VerifyReason::bad_structure, "face list does not match the filling formula");
  for (const Face& f : d.faces)
    if (!x.contains(f)) return Verdict::fail(VerifyReason::missing_face, "face " + f.str() + " not in complex");
  if (k == 2) return check_triangulated_disk(d.faces, d.boundary);
  return Verdict::pass();
}

/// U (branch candidates) and one internal-vertex block W_sigma per k-face sigma
/// of K_t^k; `sigmas` lists those faces lexicographically, `blocks` in the same order.
struct VertexPartition {
  int n = 0;
  int t = 0;
  int k = 0;
  std::vector<int> u;
  std::vector<Face> sigmas;
  std::vector<std::vector<int>> blocks;
};

struct MinorWitness {
  int t = 0;
  int k = 0;
  int n = 0;
  std::vector<int> branch;            // f(1) ... f(t)
  std::vector<DiskFilling> fillings;  // one per sigma, lexicographic sigma order
};

/// Image f(sigma) of a face of [t].
inline Face image_of(const std::vector<int>& branch, const Face& sigma) {
  std::vector<int> out;
  for (int i : sigma.vertices()) out.push_back(branch[static_cast<std::size_t>(i) - 1]);
  return Face::from_unsorted(std::move(out));
}

inline std::vector<Face> top_faces_of_simplex(int t, int k) { return make_complete_complex(t, k).top_faces(); }

inline Verdict verify_minor_witness(const KComplex& x, const MinorWitness& w) {
  if (w.k != x.k() || w.n != x.n()) return Verdict::fail(VerifyReason::bad_structure, "witness dimensions differ from complex");
  if (w.t < w.k + 1 || w.branch.size() != static_cast<std::size_t>(w.t))
    return Verdict::fail(VerifyReason::bad_structure, "branch map must have t >= k+1 entries");
  std::set<int> branch_set;
  for (int a : w.branch) {
    if (a < 1 || a > x.n()) return Verdict::fail(VerifyReason::bad_structure, "branch vertex outside [n]");
    if (!branch_set.insert(a).second) return Verdict::fail(VerifyReason::not_injective, "branch map repeats " + std::to_string(a));
  }
  const auto sigmas = top_faces_of_simplex(w.t, w.k);
  if (w.fillings.size() != sigmas.size())
    return Verdict::fail(VerifyReason::bad_structure, "expected " + std::to_string(sigmas.size()) + " fillings");
  std::set<int> internal;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const DiskFilling& d = w.fillings[i];
    if (d.boundary != image_of(w.branch, sigmas[i]))
      return Verdict::fail(VerifyReason::boundary_mismatch, "filling " + std::to_string(i) + " does not bound f" + sigmas[i].str());
    if (Verdict v = verify_disk_filling(x, d); !v) return v;
    for (int p : d.path) {
      if (branch_set.count(p)) return Verdict::fail(VerifyReason::bad_structure, "path vertex is a branch vertex");
      if (!internal.insert(p).second)
        return Verdict::fail(VerifyReason::shared_internal_vertex, "vertex " + std::to_string(p) + " used by two fillings");
    }
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Witness text format:
//
//   t k n
//   branch: a_1 ... a_t
//   sigma: i_1 ... i_{k+1}      (repeated for every sigma, lexicographic)
//   apex: a
//   path: w_0 ... w_m
//
// Faces are rebuilt from the formula on load.

inline std::string serialize_witness(const MinorWitness& w) {
  auto join = [](auto&& range) {
    std::string s;
    for (int v : range) s += ' ' + std::to_string(v);
    return s;
  };
  std::string out = std::to_string(w.t) + " " + std::to_string(w.k) + " " + std::to_string(w.n) + "\n";
  out += "branch:" + join(w.branch) + "\n";
  const auto sigmas = top_faces_of_simplex(w.t, w.k);
  for (std::size_t i = 0; i < w.fillings.size() && i < sigmas.size(); ++i) {
    out += "sigma:" + join(sigmas[i].vertices()) + "\n";
    out += "apex: " + std::to_string(w.fillings[i].apex) + "\n";
    out += "path:" + join(w.fillings[i].path) + "\n";
  }
  return out;
}

inline MinorWitness deserialize_witness(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  detail::for_each_content_line(text, [&](std::size_t no, std::string_view line) { lines.emplace_back(no, line); });
  std::size_t cursor = 0;
  auto next = [&](std::string_view tag) -> std::vector<long long> {
    if (cursor >= lines.size()) throw ParseError(0, "unexpected end of witness");
    auto [no, line] = lines[cursor++];
    if (!tag.empty()) {
      if (line.substr(0, tag.size()) != tag) throw ParseError(no, "expected `" + std::string(tag) + "`");
      line.remove_prefix(tag.size());
    }
    auto ints = detail::parse_ints(line);
    if (!ints) throw ParseError(no, "expected integers");
    return *ints;
  };
  auto to_ints = [](const std::vector<long long>& v) { return std::vector<int>(v.begin(), v.end()); };
  const auto header = next("");
  if (header.size() != 3) throw ParseError(lines.empty() ? 0 : lines[0].first, "header must be `t k n`");
  MinorWitness w;
  w.t = static_cast<int>(header[0]);
  w.k = static_cast<int>(header[1]);
  w.n = static_cast<int>(header[2]);
  if (w.k < 1 || w.t < w.k + 1 || w.n < 1) throw ParseError(lines[0].first, "invalid header values");
  w.branch = to_ints(next("branch:"));
  if (w.branch.size() != static_cast<std::size_t>(w.t)) throw ParseError(lines[cursor - 1].first, "branch needs t vertices");
  for (const Face& sigma : top_faces_of_simplex(w.t, w.k)) {
    const std::size_t sigma_line = cursor < lines.size() ? lines[cursor].first : 0;
    if (to_ints(next("sigma:")) != std::vector<int>(sigma.vertices().begin(), sigma.vertices().end()))
      throw ParseError(sigma_line, "expected sigma " + sigma.str());
    const auto apex = next("apex:");
    const std::size_t path_line = cursor < lines.size() ? lines[cursor].first : 0;
    auto path = to_ints(next("path:"));
    if (apex.size() != 1) throw ParseError(path_line, "apex needs exactly one vertex");
    const Face image = [&] {
      try {
        return image_of(w.branch, sigma);
      } catch (const Error& e) {
        throw ParseError(sigma_line, e.what());
      }
    }();
    const int a = static_cast<int>(apex[0]);
    if (!image.contains(a)) throw ParseError(path_line, "apex must be a branch vertex of this sigma");
    try {
      w.fillings.push_back(make_disk_filling(a, image.without(a), std::move(path)));
    } catch (const Error& e) {
      throw ParseError(path_line, e.what());
    }
  }
  if (cursor != lines.size()) throw ParseError(lines[cursor].first, "trailing content");
  return w;
}

}  // namespace mincplx
