#pragma once

// Seeded samplers for X^k(n, p) and G(n, p).

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/graph.hpp"
#include "mincplx/rng.hpp"

namespace mincplx {

/// p = (c/n)^(1/k), computed as exp(ln(c/n)/k) in double precision.
inline double p_from_c(double c, int n, int k) {
  if (c < 0.0) throw Error(ErrorCode::invalid_argument, "c must be non-negative");
  if (k < 1) throw Error(ErrorCode::invalid_dimension, "c-mode needs k >= 1");
  if (c == 0.0) return 0.0;
  return std::exp(std::log(c / static_cast<double>(n)) / static_cast<double>(k));
}

struct RandomParams {
  int n = 0;
  int k = 2;
  double p = 0.0;
  std::optional<double> c;  // set when p was derived from c
  std::uint64_t seed = 0;

  static RandomParams from_c(int n, int k, double c, std::uint64_t seed) {
    return RandomParams{n, k, p_from_c(c, n, k), c, seed};
  }

  void validate() const {
    if (k < 0 || n < k + 1) throw Error(ErrorCode::invalid_dimension, "need n >= k+1");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in [0, 1] (c too large for n?)");
  }
};

/// X^k(n, p). Membership is evaluated on demand from the per-face counter draw,
/// so the result is independent of evaluation order; call materialize() for an
/// explicit face list.
inline KComplex sample_complex(const RandomParams& params) {
  params.validate();
  return KComplex::sampled(params.n, params.k, params.p, params.seed);
}

/// Calls fn(u, v, uniform) for every pair u < v of [n]; the pair's counter is its colex rank.
template <class Fn>
void for_each_pair_uniform(int n, std::uint64_t seed, Fn&& fn) {
  std::uint64_t rank = 0;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u, ++rank) fn(u, v, rng::counter_uniform(seed, rank));
}

/// G(n, p): pair {u, v} present iff its counter draw is below p.
inline Graph sample_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  if (p > 0.0)
    for_each_pair_uniform(n, seed, [&](int u, int v, double x) {
      if (x < p) edges.emplace_back(u, v);
    });
  return Graph(n, std::move(edges));
}

}  // namespace mincplx
