#pragma once

// Faces, k-complexes with complete (k-1)-skeleton, general simplicial
// complexes, links, and the text format for k-complexes.

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mincplx/error.hpp"
#include "mincplx/rng.hpp"

namespace mincplx {

/// Largest supported top-face dimension.
inline constexpr int kMaxDimension = 15;

/// A face: strictly increasing positive vertex ids. The empty face is allowed.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

  explicit Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] < 1)
        throw Error(ErrorCode::vertex_out_of_range, "vertex ids are 1-based, got " + std::to_string(vertices_[i]));
      if (i > 0 && vertices_[i - 1] >= vertices_[i])
        throw Error(ErrorCode::invalid_argument, "face vertices must be strictly increasing");
    }
  }

  /// Sorts; repeated vertices are an error.
  static Face from_unsorted(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Face(std::move(vertices));
  }

  std::span<const int> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  int operator[](std::size_t i) const { return vertices_[i]; }
  int max_vertex() const noexcept { return vertices_.empty() ? 0 : vertices_.back(); }

  bool contains(int v) const noexcept { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
  }

  bool is_disjoint_from(const Face& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  Face with(int v) const {
    if (contains(v)) throw Error(ErrorCode::invalid_argument, "vertex already in face");
    std::vector<int> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return Face(std::move(out));
  }

  Face without(int v) const {
    std::vector<int> out;
    out.reserve(vertices_.size());
    for (int x : vertices_)
      if (x != v) out.push_back(x);
    return Face(std::move(out));
  }

  Face united(const Face& other) const {
    std::vector<int> out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(out));
    return Face(std::move(out));
  }

  /// All subsets of the given cardinality, in lexicographic order.
  std::vector<Face> subfaces(std::size_t cardinality) const;

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(vertices_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Calls fn(span) for every r-subset of {1..n} in lexicographic order.
/// fn may return void, or bool where false stops the enumeration.
template <class Fn>
void for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[i] = i + 1;
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const int>>, bool>) {
      if (!fn(std::span<const int>(c))) return;
    } else {
      fn(std::span<const int>(c));
    }
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::vector<Face> Face::subfaces(std::size_t cardinality) const {
  std::vector<Face> out;
  const int m = static_cast<int>(vertices_.size());
  for_each_combination(m, static_cast<int>(cardinality), [&](std::span<const int> idx) {
    std::vector<int> vs;
    vs.reserve(idx.size());
    for (int i : idx) vs.push_back(vertices_[i - 1]);
    out.emplace_back(std::move(vs));
  });
  return out;
}

/// Pascal's triangle up to row n and column r; entries that overflow are saturated.
class BinomialTable {
 public:
  static constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

  BinomialTable(int n, int r)
      : rows_(n + 1), cols_(r + 1), values_(static_cast<std::size_t>(rows_) * cols_, 0) {
    for (int i = 0; i < rows_; ++i) {
      at(i, 0) = 1;
      for (int j = 1; j < cols_ && j <= i; ++j) {
        const std::uint64_t a = at(i - 1, j - 1);
        const std::uint64_t b = j <= i - 1 ? at(i - 1, j) : 0;
        at(i, j) = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated : a + b;
      }
    }
  }

  std::uint64_t operator()(int n, int r) const noexcept {
    if (r < 0 || n < 0 || r > n || n >= rows_ || r >= cols_) return 0;
    return values_[static_cast<std::size_t>(n) * cols_ + r];
  }

 private:
  std::uint64_t& at(int i, int j) { return values_[static_cast<std::size_t>(i) * cols_ + j]; }

  int rows_;
  int cols_;
  std::vector<std::uint64_t> values_;
};

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / num)
      throw Error(ErrorCode::size_guard, "binomial coefficient overflows 64 bits");
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

/// A k-complex on [n] with complete (k-1)-skeleton, identified with its set of
/// k-faces. Either explicit (a stored face set) or sampled (membership is the
/// per-face counter draw described in rng.hpp). Immutable; copies share storage.
class KComplex {
 public:
  /// Explicit complex. Duplicate faces are merged; `duplicates`, if given, receives their count.
  KComplex(int n, int k, std::vector<Face> top_faces, std::size_t* duplicates = nullptr)
      : KComplex(n, k) {
    std::sort(top_faces.begin(), top_faces.end());
    const auto last = std::unique(top_faces.begin(), top_faces.end());
    if (duplicates) *duplicates = static_cast<std::size_t>(top_faces.end() - last);
    top_faces.erase(last, top_faces.end());
    for (const Face& f : top_faces) {
      if (f.dimension() != k_)
        throw Error(ErrorCode::invalid_dimension,
                    "top face " + f.str() + " has dimension " + std::to_string(f.dimension()) + ", expected " +
                        std::to_string(k_));
      if (f.max_vertex() > n_) throw Error(ErrorCode::vertex_out_of_range, "face " + f.str() + " outside [n]");
    }
    auto store = std::make_shared<Store>();
    const std::uint64_t universe = universe_size();
    store->dense = universe <= kDenseLimit;
    if (store->dense) {
      store->bits.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
      for (const Face& f : top_faces) {
        const std::uint64_t r = rank(f.vertices());
        store->bits[r >> 6] |= std::uint64_t{1} << (r & 63);
      }
    } else {
      store->sparse.reserve(top_faces.size());
      for (const Face& f : top_faces) store->sparse.insert(rank(f.vertices()));
    }
    store->faces = std::move(top_faces);
    store_ = std::move(store);
  }

  /// Sampled complex: each k-face is present iff counter_uniform(seed, rank) < p.
  static KComplex sampled(int n, int k, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in [0, 1]");
    KComplex x(n, k);
    x.sampled_ = true;
    x.p_ = p;
    x.seed_ = seed;
    return x;
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  bool is_sampled() const noexcept { return sampled_; }
  double p() const noexcept { return p_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Number of possible k-faces, binomial(n, k+1).
  std::uint64_t universe_size() const noexcept { return (*binom_)(n_, k_ + 1); }

  /// Colex rank of a sorted (k+1)-subset of [n]; in [0, universe_size()).
  std::uint64_t rank(std::span<const int> sorted) const noexcept {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += (*binom_)(sorted[i] - 1, static_cast<int>(i) + 1);
    return r;
  }

  /// Membership test for a sorted, in-range (k+1)-subset. No validation.
  bool contains_top(std::span<const int> sorted) const noexcept {
    const std::uint64_t r = rank(sorted);
    if (sampled_) return rng::counter_uniform(seed_, r) < p_;
    if (store_->dense) return (store_->bits[r >> 6] >> (r & 63)) & 1U;
    return store_->sparse.count(r) != 0;
  }

  /// Faces of dimension below k are always present.
  bool contains(const Face& f) const {
    if (f.max_vertex() > n_)
      throw Error(ErrorCode::vertex_out_of_range, "face " + f.str() + " has a vertex outside [1, " + std::to_string(n_) + "]");
    if (f.dimension() < k_) return true;
    if (f.dimension() > k_) return false;
    return contains_top(f.vertices());
  }

  /// Top faces in lexicographic order. Sampled complexes scan all k-subsets.
  std::vector<Face> top_faces() const {
    if (!sampled_) return store_->faces;
    std::vector<Face> out;
    for_each_combination(n_, k_ + 1, [&](std::span<const int> c) {
      if (contains_top(c)) out.emplace_back(std::vector<int>(c.begin(), c.end()));
    });
    return out;
  }

  /// Calls fn(span) for every top face in lexicographic order.
  template <class Fn>
  void for_each_top_face(Fn&& fn) const {
    if (!sampled_) {
      for (const Face& f : store_->faces) fn(f.vertices());
      return;
    }
    for_each_combination(n_, k_ + 1, [&](std::span<const int> c) {
      if (contains_top(c)) fn(c);
    });
  }

  std::size_t top_face_count() const {
    if (!sampled_) return store_->faces.size();
    std::size_t count = 0;
    for_each_top_face([&](std::span<const int>) { ++count; });
    return count;
  }

  /// Explicit copy; the identity for explicit complexes.
  KComplex materialize() const {
    if (!sampled_) return *this;
    return KComplex(n_, k_, top_faces());
  }

  friend bool operator==(const KComplex& a, const KComplex& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.top_faces() == b.top_faces();
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;

  struct Store {
    bool dense = true;
    std::vector<std::uint64_t> bits;
    std::unordered_set<std::uint64_t> sparse;
    std::vector<Face> faces;
  };

  KComplex(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > kMaxDimension)
      throw Error(ErrorCode::invalid_dimension, "dimension must lie in [0, " + std::to_string(kMaxDimension) + "]");
    if (n < k + 1) throw Error(ErrorCode::invalid_dimension, "need n >= k+1");
    binom_ = std::make_shared<const BinomialTable>(n, k + 1);
    if ((*binom_)(n, k + 1) == BinomialTable::kSaturated)
      throw Error(ErrorCode::size_guard, "binomial(n, k+1) overflows 64 bits");
    store_ = std::make_shared<const Store>();
  }

  int n_ = 0;
  int k_ = 0;
  std::shared_ptr<const BinomialTable> binom_;
  std::shared_ptr<const Store> store_;
  bool sampled_ = false;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
};

/// K_t^k: all (k+1)-subsets of [t].
inline KComplex make_complete_complex(int t, int k) {
  if (k < 0 || t < k + 1)
    throw Error(ErrorCode::invalid_dimension, "complete complex needs t >= k+1 (t=" + std::to_string(t) +
                                                  ", k=" + std::to_string(k) + ")");
  std::vector<Face> faces;
  for_each_combination(t, k + 1, [&](std::span<const int> c) { faces.emplace_back(std::vector<int>(c.begin(), c.end())); });
  return KComplex(t, k, std::move(faces));
}

/// A finite simplicial complex given by all of its faces (the empty face included).
class GeneralComplex {
 public:
  GeneralComplex() : faces_{Face{}} {}

  explicit GeneralComplex(std::set<Face> faces) : faces_(std::move(faces)) {
    if (!is_downward_closed(faces_)) throw Error(ErrorCode::invalid_argument, "face set is not closed under subsets");
  }

  /// Smallest complex containing the given faces.
  static GeneralComplex closure(const std::vector<Face>& generators) {
    std::set<Face> faces{Face{}};
    for (const Face& g : generators)
      for (std::size_t r = 1; r <= g.size(); ++r)
        for (Face& s : g.subfaces(r)) faces.insert(std::move(s));
    GeneralComplex x;
    x.faces_ = std::move(faces);
    return x;
  }

  /// Full face set of a k-complex with complete (k-1)-skeleton; small n only.
  static GeneralComplex from_kcomplex(const KComplex& x) {
    if (x.n() > 24) throw Error(ErrorCode::size_guard, "from_kcomplex expanded only for n <= 24");
    std::set<Face> faces{Face{}};
    for (int r = 1; r <= x.k(); ++r)
      for_each_combination(x.n(), r, [&](std::span<const int> c) { faces.emplace(std::vector<int>(c.begin(), c.end())); });
    for (Face& f : x.top_faces()) faces.insert(std::move(f));
    GeneralComplex out;
    out.faces_ = std::move(faces);
    return out;
  }

  /// Exhaustive scan: every subset of every face is present.
  static bool is_downward_closed(const std::set<Face>& faces) {
    for (const Face& f : faces) {
      const std::size_t m = f.size();
      if (m >= 63) return false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < m; ++i)
          if ((mask >> i) & 1U) sub.push_back(f[i]);
        if (!faces.count(Face(std::move(sub)))) return false;
      }
    }
    return true;
  }

  const std::set<Face>& faces() const noexcept { return faces_; }
  bool contains(const Face& f) const { return faces_.count(f) != 0; }
  std::size_t size() const noexcept { return faces_.size(); }

  std::size_t count_of_dimension(int d) const {
    return static_cast<std::size_t>(std::count_if(faces_.begin(), faces_.end(), [d](const Face& f) { return f.dimension() == d; }));
  }

  friend bool operator==(const GeneralComplex&, const GeneralComplex&) = default;

 private:
  std::set<Face> faces_;
};

/// lk_X(F) = { H in X : H u F in X, H n F = {} }.
inline GeneralComplex link(const GeneralComplex& x, const Face& f) {
  if (!x.contains(f)) throw Error(ErrorCode::face_not_in_complex, "link of " + f.str() + ": face not in complex");
  std::set<Face> out;
  for (const Face& h : x.faces())
    if (h.is_disjoint_from(f) && x.contains(h.united(f))) out.insert(h);
  return GeneralComplex(std::move(out));
}

// ---------------------------------------------------------------------------
// Text format.
//
//   line 1:  n k
//   then:    one top face per line, k+1 increasing integers
//   `#` at the start of a line marks a comment; blank lines are ignored.
// Output is canonical: faces sorted lexicographically.

struct ComplexReadResult {
  KComplex complex;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Whitespace-separated integers; nullopt on any malformed token.
inline std::optional<std::vector<long long>> parse_ints(std::string_view s) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || ptr != s.data() + j) return std::nullopt;
    out.push_back(v);
    i = j;
  }
  return out;
}

template <class LineFn>
void for_each_content_line(std::string_view text, LineFn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') fn(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace detail

inline std::string serialize_complex(const KComplex& x) {
  std::string out = std::to_string(x.n()) + " " + std::to_string(x.k()) + "\n";
  x.for_each_top_face([&](std::span<const int> f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  });
  return out;
}

inline ComplexReadResult deserialize_complex_with_warnings(std::string_view text) {
  std::optional<std::pair<int, int>> header;
  std::vector<Face> faces;
  std::set<Face> seen;
  std::vector<std::string> warnings;
  detail::for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto ints = detail::parse_ints(line);
    if (!ints) throw ParseError(line_no, "expected integers");
    if (!header) {
      if (ints->size() != 2) throw ParseError(line_no, "header must be `n k`");
      const long long n = (*ints)[0];
      const long long k = (*ints)[1];
      if (k < 0 || k > kMaxDimension || n < k + 1 || n > std::numeric_limits<int>::max())
        throw ParseError(line_no, "invalid header values");
      header = {static_cast<int>(n), static_cast<int>(k)};
      return;
    }
    const auto [n, k] = *header;
    if (ints->size() != static_cast<std::size_t>(k + 1))
      throw ParseError(line_no, "face has " + std::to_string(ints->size()) + " vertices, expected " + std::to_string(k + 1));
    std::vector<int> vs;
    for (std::size_t i = 0; i < ints->size(); ++i) {
      const long long v = (*ints)[i];
      if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " outside [1, n]");
      if (i > 0 && (*ints)[i - 1] >= v) throw ParseError(line_no, "face vertices must be strictly increasing");
      vs.push_back(static_cast<int>(v));
    }
    Face f(std::move(vs));
    if (!seen.insert(f).second) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate face " + f.str() + " ignored");
      return;
    }
    faces.push_back(std::move(f));
  });
  if (!header) throw ParseError(0, "missing `n k` header");
  return {KComplex(header->first, header->second, std::move(faces)), std::move(warnings)};
}

inline KComplex deserialize_complex(std::string_view text) { return deserialize_complex_with_warnings(text).complex; }

}  // namespace mincplx

template <>
struct std::hash<mincplx::Face> {
  std::size_t operator()(const mincplx::Face& f) const noexcept {
    std::uint64_t h = 0;
    for (int v : f.vertices()) h = mincplx::rng::mix64(h ^ static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};
