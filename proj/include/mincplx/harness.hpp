#pragma once

// Seeded experiment sweeps over (n, c) grids with deterministic aggregation,
// plus reference Chernoff tail bounds.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mincplx/error.hpp"
#include "mincplx/graph.hpp"
#include "mincplx/minor_finder.hpp"
#include "mincplx/parallel.hpp"
#include "mincplx/pi1_filler.hpp"
#include "mincplx/random_gen.hpp"
#include "mincplx/rng.hpp"

namespace mincplx {

enum class SweepMode { minor, pi1, giant };

inline const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::minor: return "minor";
    case SweepMode::pi1: return "pi1";
    case SweepMode::giant: return "giant";
  }
  return "unknown";
}

inline std::optional<SweepMode> parse_sweep_mode(std::string_view s) {
  if (s == "minor") return SweepMode::minor;
  if (s == "pi1") return SweepMode::pi1;
  if (s == "giant") return SweepMode::giant;
  return std::nullopt;
}

struct SweepConfig {
  SweepMode mode = SweepMode::minor;
  std::vector<int> ns;
  int k = 2;
  int t = 4;
  std::vector<double> cs;
  int trials = 1;
  std::uint64_t seed = 0;
  bool coupled = true;  // one uniform per face shared by every c of a trial
  bool repro = false;   // zero the wall-clock column
  unsigned threads = 0; // 0: worker_count() default
  FinderConfig finder;  // t and c are overwritten per cell

  void validate() const {
    if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be at least 1");
    if (ns.empty() || cs.empty()) throw Error(ErrorCode::invalid_argument, "n and c grids must be non-empty");
    for (std::size_t i = 1; i < cs.size(); ++i)
      if (!(cs[i] > cs[i - 1])) throw Error(ErrorCode::invalid_argument, "c grid must be strictly increasing");
    const int dim = mode == SweepMode::giant ? 1 : k;
    if (mode == SweepMode::pi1 && k != 2) throw Error(ErrorCode::unsupported_dimension, "pi1 sweeps need k = 2");
    for (int n : ns) {
      if (n < 2) throw Error(ErrorCode::invalid_argument, "every n must be at least 2");
      for (double c : cs)
        if (!(c >= 0.0) || c > n) throw Error(ErrorCode::invalid_argument, "c must lie in [0, n] so that p <= 1");
      if (mode == SweepMode::minor) (void)partition_vertices(n, t, dim);
    }
    if (mode == SweepMode::minor) {
      FinderConfig probe = finder;
      probe.t = t;
      probe.c = cs.front();
      probe.validate(k);
    }
  }
};

struct SweepRow {
  int n = 0;
  int k = 0;
  std::optional<int> t;  // absent for giant-component rows
  double c = 0.0;
  double p = 0.0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  std::optional<double> mean_lcc_frac;
  std::optional<double> mean_min_good_set;
  double wall_ms = 0.0;
};

struct TrialOutcome {
  bool success = false;
  std::optional<double> lcc_frac;
  std::optional<double> min_good_set;
  double wall_ms = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;                        // grid order: n outer, c inner
  std::vector<std::vector<TrialOutcome>> outcomes;   // outcomes[row][trial]
};

/// Seed of one trial. Coupled sweeps share it across the c grid (and n grid);
/// independent sweeps also mix in the cell index.
inline std::uint64_t trial_seed(const SweepConfig& config, std::size_t cell, std::size_t trial) {
  if (config.coupled) return rng::derive_trial_seed(config.seed, trial);
  return rng::derive_trial_seed(rng::derive_trial_seed(config.seed, cell), trial);
}

inline double cell_p(const SweepConfig& config, int n, double c) {
  return config.mode == SweepMode::giant ? c / n : p_from_c(c, n, config.k);
}

/// Success floor for giant-component rows: gamma/2 with c = 1 + gamma. No
/// floor is promised at c <= 1, and those trials never count as successes.
inline bool giant_success(double c, double fraction) { return c > 1.0 && fraction >= (c - 1.0) / 2.0; }

inline double largest_component_fraction(int n, double p, std::uint64_t seed) {
  UnionFind uf(static_cast<std::size_t>(n) + 1);
  if (p > 0.0)
    for_each_pair_uniform(n, seed, [&](int u, int v, double x) {
      if (x < p) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    });
  std::size_t best = 0;
  for (int v = 1; v <= n; ++v)
    if (uf.find(static_cast<std::size_t>(v)) == static_cast<std::size_t>(v)) best = std::max(best, uf.component_size(static_cast<std::size_t>(v)));
  return static_cast<double>(best) / n;
}

/// Outcome of one trial at one cell. `carried` is a witness from an earlier,
/// smaller c of the same coupled trial; coupling keeps it valid, so it is
/// re-verified and reused instead of searching again.
inline TrialOutcome run_cell_trial(const SweepConfig& config, int n, double c, std::uint64_t seed,
                                   std::optional<MinorWitness>* carried = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  TrialOutcome out;
  const double p = cell_p(config, n, c);
  switch (config.mode) {
    case SweepMode::giant: {
      const double frac = largest_component_fraction(n, p, seed);
      out.lcc_frac = frac;
      out.success = giant_success(c, frac);
      break;
    }
    case SweepMode::pi1: {
      const KComplex x = sample_complex({n, config.k, p, c, seed});
      const auto report = all_three_cycles_fillable(x);
      out.success = report.fillable;
      out.min_good_set = static_cast<double>(report.min_good_set);
      out.lcc_frac = n > 2 ? static_cast<double>(report.pair12_component) / (n - 2) : 0.0;
      break;
    }
    case SweepMode::minor: {
      const KComplex x = sample_complex({n, config.k, p, c, seed});
      if (carried && *carried && verify_minor_witness(x, **carried)) {
        out.success = true;
        break;
      }
      FinderConfig fc = config.finder;
      fc.t = config.t;
      fc.c = c;
      fc.seed = rng::mix64(seed ^ 0x5851f42d4c957f2dULL);
      if (auto found = find_topological_minor(x, fc)) {
        out.success = true;
        if (carried) *carried = std::move(found->witness);
      }
      break;
    }
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Every cell of one n for one trial index, c ascending.
inline std::vector<TrialOutcome> run_trial_series(const SweepConfig& config, std::size_t n_index, std::size_t trial) {
  const int n = config.ns[n_index];
  std::vector<TrialOutcome> out;
  std::optional<MinorWitness> carried;
  bool filled_before = false;
  for (std::size_t ci = 0; ci < config.cs.size(); ++ci) {
    const std::size_t cell = n_index * config.cs.size() + ci;
    const std::uint64_t seed = trial_seed(config, cell, trial);
    TrialOutcome o = run_cell_trial(config, n, config.cs[ci], seed, config.coupled ? &carried : nullptr);
    // Fillings of every 3-cycle survive in the coupled superset complex.
    if (config.mode == SweepMode::pi1 && config.coupled) {
      o.success = o.success || filled_before;
      filled_before = o.success;
    }
    out.push_back(std::move(o));
  }
  return out;
}

inline SweepResult threshold_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  const std::size_t trials = static_cast<std::size_t>(config.trials);
  const unsigned workers = worker_count(config.threads);
  for (std::size_t ni = 0; ni < config.ns.size(); ++ni) {
    std::vector<std::vector<TrialOutcome>> per_trial(trials);
    parallel_for(trials, workers, [&](std::size_t i) { per_trial[i] = run_trial_series(config, ni, i); });
    const int n = config.ns[ni];
    for (std::size_t ci = 0; ci < config.cs.size(); ++ci) {
      SweepRow row;
      row.n = n;
      row.k = config.mode == SweepMode::giant ? 1 : config.k;
      if (config.mode == SweepMode::minor) row.t = config.t;
      if (config.mode == SweepMode::pi1) row.t = config.k + 1;
      row.c = config.cs[ci];
      row.p = cell_p(config, n, row.c);
      row.trials = config.trials;
      std::vector<TrialOutcome> column;
      double lcc = 0.0, good = 0.0, wall = 0.0;
      bool has_lcc = false, has_good = false;
      for (std::size_t i = 0; i < trials; ++i) {  // reduce in trial order
        const TrialOutcome& o = per_trial[i][ci];
        row.successes += o.success ? 1 : 0;
        if (o.lcc_frac) lcc += *o.lcc_frac, has_lcc = true;
        if (o.min_good_set) good += *o.min_good_set, has_good = true;
        wall += o.wall_ms;
        column.push_back(o);
      }
      row.success_rate = static_cast<double>(row.successes) / config.trials;
      if (has_lcc) row.mean_lcc_frac = lcc / config.trials;
      if (has_good) row.mean_min_good_set = good / config.trials;
      row.wall_ms = config.repro ? 0.0 : wall;
      result.rows.push_back(row);
      result.outcomes.push_back(std::move(column));
    }
  }
  return result;
}

/// Largest-component fractions of G(n, c/n) across a c grid.
inline SweepResult giant_component_sweep(int n, std::vector<double> cs, int trials, std::uint64_t seed, bool repro = false,
                                         unsigned threads = 0) {
  SweepConfig config;
  config.mode = SweepMode::giant;
  config.ns = {n};
  config.cs = std::move(cs);
  config.trials = trials;
  config.seed = seed;
  config.repro = repro;
  config.threads = threads;
  return threshold_sweep(config);
}

inline constexpr const char* kCsvHeader = "n,k,t,c,p,trials,successes,success_rate,mean_lcc_frac,mean_min_good_set,wall_ms";

inline std::string format_real(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  for (const SweepRow& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + (r.t ? std::to_string(*r.t) : std::string()) + ',' +
           format_real(r.c) + ',' + format_real(r.p) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.successes) +
           ',' + format_real(r.success_rate) + ',' + opt(r.mean_lcc_frac) + ',' + opt(r.mean_min_good_set) + ',' +
           format_real(r.wall_ms, 6) + '\n';
  }
  return out;
}

/// Pr[X >= np + dev] <= exp(-dev^2 / (2(np + dev/3))) for X ~ Bin(n, p).
inline double chernoff_upper(long n, double p, double dev) {
  if (dev < 0.0 || n < 0 || !(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "need dev >= 0, n >= 0, p in [0, 1]");
  if (dev == 0.0) return 1.0;
  return std::exp(-dev * dev / (2.0 * (n * p + dev / 3.0)));
}

/// Pr[X <= np - dev] <= exp(-dev^2 / (2np)). Undefined for np = 0 with dev > 0.
inline double chernoff_lower(long n, double p, double dev) {
  if (dev < 0.0 || n < 0 || !(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "need dev >= 0, n >= 0, p in [0, 1]");
  if (dev == 0.0) return 1.0;
  if (n * p == 0.0) throw Error(ErrorCode::singular, "lower-tail bound needs np > 0 when dev > 0");
  return std::exp(-dev * dev / (2.0 * n * p));
}

}  // namespace mincplx
