#pragma once

// Constructive search for a subdivision of K_t^k in a k-complex with complete
// (k-1)-skeleton.
//
// The vertex set is split into U (branch vertex candidates) and blocks W_sigma,
// one per k-face sigma of K_t^k. For a k-set F in U, C_F^sigma is the largest
// component of G_F[W_sigma]. A tuple f: [t] -> U works if every sigma has an
// apex a in f(sigma) such that, for F = f(sigma) \ {a}, some v in C_F^sigma
// caps F (F u {v} in X) and some w in C_F^sigma is a G_F-neighbor of a. The
// w-v path inside C_F^sigma then carries a disk bounded by f(sigma), and
// disjoint blocks keep the disks internally disjoint.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/link_graphs.hpp"
#include "mincplx/rng.hpp"
#include "mincplx/witness.hpp"

namespace mincplx {

/// Smallest c strictly above 2T (ln T + ln(k+1)) / (1 - eps), rounded up to one decimal.
inline double preset_c(int t, int k, double epsilon = 1.0 / 3.0) {
  const double big_t = static_cast<double>(binomial(t, k + 1));
  const double bound = 2.0 * big_t * (std::log(big_t) + std::log(k + 1.0)) / (1.0 - epsilon);
  double c = std::ceil(bound * 10.0) / 10.0;
  if (c <= bound) c += 0.1;
  return c;
}

struct FinderConfig {
  int t = 4;
  std::optional<double> delta;  // unset: derived from c (see effective_delta)
  double epsilon = 1.0 / 3.0;
  int max_random_tuples = 200;
  long deterministic_scan_budget = 10'000;
  std::uint64_t seed = 0;
  std::optional<double> c;  // threshold constant, when p = (c/n)^(1/k)

  /// Explicit delta, else the midpoint of (exp(-c(1-eps)/(2T)), 1/(T(k+1))) when
  /// c is known and that interval is non-empty, else 1/(2T(k+1)).
  double effective_delta(int k) const {
    if (delta) return *delta;
    const double big_t = static_cast<double>(binomial(t, k + 1));
    const double upper = 1.0 / (big_t * (k + 1));
    if (c) {
      const double lower = std::exp(-*c * (1.0 - epsilon) / (2.0 * big_t));
      if (lower < upper) return 0.5 * (lower + upper);
    }
    return 0.5 * upper;
  }

  void validate(int k) const {
    if (t < k + 1) throw Error(ErrorCode::invalid_dimension, "need t >= k+1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::invalid_argument, "epsilon must lie in (0, 1)");
    const double d = effective_delta(k);
    const double upper = 1.0 / (static_cast<double>(binomial(t, k + 1)) * (k + 1));
    if (!(d > 0.0 && d < upper)) throw Error(ErrorCode::invalid_argument, "delta must lie in (0, 1/(T(k+1)))");
    if (max_random_tuples < 0 || deterministic_scan_budget < 0)
      throw Error(ErrorCode::invalid_argument, "search budgets must be non-negative");
  }
};

/// U = first ceil(n/2) vertices; the rest split into T consecutive blocks whose
/// sizes differ by at most one, larger blocks first. Requires n >= 2T(k+1).
inline VertexPartition partition_vertices(int n, int t, int k) {
  if (k < 1 || t < k + 1) throw Error(ErrorCode::invalid_dimension, "need k >= 1 and t >= k+1");
  const std::uint64_t big_t = binomial(t, k + 1);
  const std::uint64_t needed = 2 * big_t * static_cast<std::uint64_t>(k + 1);
  if (n < 0 || static_cast<std::uint64_t>(n) < needed)
    throw Error(ErrorCode::partition_too_small,
                "n=" + std::to_string(n) + " too small: need n >= 2*binomial(t,k+1)*(k+1) = " + std::to_string(needed));
  VertexPartition p;
  p.n = n;
  p.t = t;
  p.k = k;
  const int u_size = (n + 1) / 2;
  for (int v = 1; v <= u_size; ++v) p.u.push_back(v);
  p.sigmas = top_faces_of_simplex(t, k);
  const int rest = n - u_size;
  const int blocks = static_cast<int>(big_t);
  int next = u_size + 1;
  for (int b = 0; b < blocks; ++b) {
    const int size = rest / blocks + (b < rest % blocks ? 1 : 0);
    std::vector<int> block;
    for (int i = 0; i < size; ++i) block.push_back(next++);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

struct EventReport {
  Face base;   // F
  Face sigma;  // face of [t]
  bool event_a = false;  // some v in C_F^sigma caps F
  bool event_b = false;  // n_connected >= (1 - delta)(|U| - k)
  std::size_t component_size = 0;
  std::size_t n_connected = 0;  // |N_F^sigma|
  std::size_t cap_count = 0;
  double delta_used = 0.0;
};

/// f(1..t) and, per sigma in lexicographic order, the apex used.
struct BranchTuple {
  std::vector<int> branch;
  std::vector<int> apexes;
  long attempts = 0;
  bool from_random_phase = true;
};

struct FoundMinor {
  MinorWitness witness;
  VertexPartition partition;
  BranchTuple tuple;
};

/// Search state over one complex and partition; caches C_F^sigma.
class MinorSearch {
 public:
  MinorSearch(const KComplex& x, VertexPartition partition) : x_(x), partition_(std::move(partition)) {
    if (partition_.k != x.k() || partition_.n != x.n())
      throw Error(ErrorCode::invalid_argument, "partition does not match complex");
  }

  const KComplex& complex() const noexcept { return x_; }
  const VertexPartition& partition() const noexcept { return partition_; }

  std::size_t sigma_index(const Face& sigma) const {
    const auto it = std::lower_bound(partition_.sigmas.begin(), partition_.sigmas.end(), sigma);
    if (it == partition_.sigmas.end() || *it != sigma)
      throw Error(ErrorCode::invalid_argument, "sigma " + sigma.str() + " is not a k-face of [t]");
    return static_cast<std::size_t>(it - partition_.sigmas.begin());
  }

  /// C_F^sigma.
  const Component& component(const Face& base, std::size_t sigma) {
    auto key = std::make_pair(base, sigma);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto& block = partition_.blocks.at(sigma);
    const Graph g = common_link_graph(x_, base, block);
    return cache_.emplace(std::move(key), largest_component(g, block)).first->second;
  }

  /// Smallest v in C with F u {v} in X.
  std::optional<int> cap_vertex(const Face& base, const Component& c) const {
    for (int v : c.vertices)
      if (caps_face(x_, base.vertices(), v)) return v;
    return std::nullopt;
  }

  /// Smallest w in C adjacent to a in G_F.
  std::optional<int> apex_neighbor(int a, const Face& base, const Component& c) const {
    for (int w : c.vertices)
      if (in_common_link(x_, base.vertices(), a, w)) return w;
    return std::nullopt;
  }

  EventReport events(const Face& base, const Face& sigma, double delta) {
    check_base_in_u(base);
    EventReport r;
    r.base = base;
    r.sigma = sigma;
    r.delta_used = delta;
    const Component& c = component(base, sigma_index(sigma));
    r.component_size = c.size();
    for (int v : c.vertices) r.cap_count += caps_face(x_, base.vertices(), v);
    for (int u : partition_.u) {
      if (base.contains(u)) continue;
      for (int w : c.vertices)
        if (in_common_link(x_, base.vertices(), u, w)) {
          ++r.n_connected;
          break;
        }
    }
    r.event_a = r.cap_count >= 1;
    r.event_b = static_cast<double>(r.n_connected) >=
                (1.0 - delta) * static_cast<double>(partition_.u.size() - base.size());
    return r;
  }

  /// Apex for sigma under the tuple, trying f(j) for j in sigma in order.
  std::optional<int> working_apex(const std::vector<int>& branch, std::size_t sigma) {
    const Face image = image_of(branch, partition_.sigmas[sigma]);
    for (int j : partition_.sigmas[sigma].vertices()) {
      const int a = branch[static_cast<std::size_t>(j) - 1];
      const Face base = image.without(a);
      const Component& c = component(base, sigma);
      if (cap_vertex(base, c) && apex_neighbor(a, base, c)) return a;
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> evaluate(const std::vector<int>& branch) {
    std::vector<int> apexes;
    for (std::size_t s = 0; s < partition_.sigmas.size(); ++s) {
      const auto a = working_apex(branch, s);
      if (!a) return std::nullopt;
      apexes.push_back(*a);
    }
    return apexes;
  }

  std::optional<DiskFilling> filling(std::size_t sigma, int a, const Face& base) {
    check_base_in_u(base);
    if (base.contains(a) || !std::binary_search(partition_.u.begin(), partition_.u.end(), a))
      throw Error(ErrorCode::invalid_argument, "apex must be a vertex of U outside the base");
    const Component& c = component(base, sigma);
    const auto v = cap_vertex(base, c);
    const auto w = apex_neighbor(a, base, c);
    if (!v || !w) return std::nullopt;
    const Graph inside = common_link_graph(x_, base, c.vertices);
    auto path = shortest_path(inside, *w, *v);
    if (!path) throw std::logic_error("largest component is not connected");
    return make_disk_filling(a, base, std::move(*path));
  }

 private:
  void check_base_in_u(const Face& base) const {
    if (base.size() != static_cast<std::size_t>(x_.k())) throw Error(ErrorCode::invalid_dimension, "base must have k vertices");
    for (int v : base.vertices())
      if (!std::binary_search(partition_.u.begin(), partition_.u.end(), v))
        throw Error(ErrorCode::invalid_argument, "base face " + base.str() + " is not inside U");
  }

  KComplex x_;
  VertexPartition partition_;
  std::map<std::pair<Face, std::size_t>, Component> cache_;
};

inline EventReport check_events(const KComplex& x, const Face& base, const Face& sigma, const VertexPartition& partition,
                                double delta) {
  MinorSearch search(x, partition);
  return search.events(base, sigma, delta);
}

namespace detail {

/// Advances an injective tuple of indices into [0, m) to its lexicographic successor.
inline bool next_injective_tuple(std::vector<int>& idx, int m) {
  const int t = static_cast<int>(idx.size());
  for (int pos = t - 1; pos >= 0; --pos) {
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < pos; ++i) used[idx[i]] = 1;
    int v = idx[pos] + 1;
    while (v < m && used[v]) ++v;
    if (v >= m) continue;
    idx[pos] = v;
    used[v] = 1;
    int fill = 0;
    for (int i = pos + 1; i < t; ++i) {
      while (used[fill]) ++fill;
      idx[i] = fill;
      used[fill] = 1;
    }
    return true;
  }
  return false;
}

}  // namespace detail

/// Seeded random injective tuples first, then a lexicographic scan; the first
/// tuple that works is returned. Absence is not a proof of non-existence.
inline std::optional<BranchTuple> find_branch_tuple(MinorSearch& search, const FinderConfig& config) {
  const auto& u = search.partition().u;
  const int t = search.partition().t;
  const int m = static_cast<int>(u.size());
  if (m < t) return std::nullopt;
  long attempts = 0;
  rng::SplitMix64 gen(config.seed);
  for (int r = 0; r < config.max_random_tuples; ++r) {
    std::vector<int> branch;
    while (static_cast<int>(branch.size()) < t) {
      const int cand = u[gen.below(static_cast<std::uint64_t>(m))];
      if (std::find(branch.begin(), branch.end(), cand) == branch.end()) branch.push_back(cand);
    }
    ++attempts;
    if (auto apexes = search.evaluate(branch)) return BranchTuple{branch, std::move(*apexes), attempts, true};
  }
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[i] = i;
  for (long scanned = 0; scanned < config.deterministic_scan_budget; ++scanned) {
    std::vector<int> branch;
    for (int i : idx) branch.push_back(u[i]);
    ++attempts;
    if (auto apexes = search.evaluate(branch)) return BranchTuple{branch, std::move(*apexes), attempts, false};
    if (!detail::next_injective_tuple(idx, m)) break;
  }
  return std::nullopt;
}

inline std::optional<BranchTuple> find_branch_tuple(const KComplex& x, const VertexPartition& partition,
                                                    const FinderConfig& config) {
  MinorSearch search(x, partition);
  return find_branch_tuple(search, config);
}

/// Disk filling f(sigma) for apex a and base F: v and w are the smallest
/// admissible vertices of C_F^sigma, joined by a shortest path inside it.
inline std::optional<DiskFilling> build_filling(const KComplex& x, const Face& sigma, int a, const Face& base,
                                                const VertexPartition& partition) {
  MinorSearch search(x, partition);
  return search.filling(search.sigma_index(sigma), a, base);
}

inline std::optional<FoundMinor> find_topological_minor(const KComplex& x, const FinderConfig& config) {
  config.validate(x.k());
  MinorSearch search(x, partition_vertices(x.n(), config.t, x.k()));
  auto tuple = find_branch_tuple(search, config);
  if (!tuple) return std::nullopt;
  MinorWitness w{config.t, x.k(), x.n(), tuple->branch, {}};
  for (std::size_t s = 0; s < search.partition().sigmas.size(); ++s) {
    const int a = tuple->apexes[s];
    const Face base = image_of(tuple->branch, search.partition().sigmas[s]).without(a);
    auto d = search.filling(s, a, base);
    if (!d) throw std::logic_error("apex accepted by the tuple search has no filling");
    w.fillings.push_back(std::move(*d));
  }
  if (const Verdict v = verify_minor_witness(x, w); !v)
    throw std::logic_error(std::string("constructed witness failed verification: ") + to_string(v.reason) + " " + v.detail);
  return FoundMinor{std::move(w), search.partition(), std::move(*tuple)};
}

inline std::optional<FoundMinor> find_topological_minor(const KComplex& x, int t, FinderConfig config = {}) {
  config.t = t;
  return find_topological_minor(x, config);
}

}  // namespace mincplx
