#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mincplx/complex.hpp"
#include "mincplx/error.hpp"
#include "mincplx/harness.hpp"
#include "mincplx/minor_finder.hpp"
#include "mincplx/oracles.hpp"
#include "mincplx/pi1_filler.hpp"
#include "mincplx/random_gen.hpp"
#include "mincplx/surface_census.hpp"
#include "mincplx/witness.hpp"

namespace mincplx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kMaxPi1AuditVertices = 60;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::io, "write to " + path + " failed");
}

/// `key = value` lines (blank lines and # comments skipped) as `--key=value` arguments.
inline std::vector<std::string> config_arguments(const std::string& text, const std::string& path) {
  std::vector<std::string> out;
  mincplx::detail::for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected `key = value`");
    const auto key = mincplx::detail::trim(line.substr(0, eq));
    const auto value = mincplx::detail::trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(line_no) + ": empty key");
    out.push_back("--" + std::string(key) + "=" + std::string(value));
  });
  return out;
}

/// Expands every `--config FILE` in place of the first argument after the
/// subcommand name, so flags given on the command line override the file.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::vector<std::string> rest, injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file argument");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
      continue;
    }
    for (auto& a : config_arguments(read_file(path), path)) injected.push_back(std::move(a));
  }
  if (rest.empty()) return injected;
  rest.insert(rest.begin() + 1, injected.begin(), injected.end());
  return rest;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto trimmed = std::string(mincplx::detail::trim(item));
    if (trimmed.empty()) continue;
    std::istringstream is(trimmed);
    T v{};
    if (!(is >> v) || !is.eof()) throw UsageError(std::string("bad value `") + trimmed + "` in " + what + " list");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + " list is empty");
  return out;
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

// Options shared by the commands that take a complex either from a file or from the generator.
struct ComplexSource {
  std::string in;
  int n = 0;
  int k = 2;
  std::optional<double> p;
  std::optional<double> c;
  std::uint64_t seed = 0;

  void attach(CLI::App& app, bool with_dimension) {
    app.add_option("--in", in, "read the complex from a file");
    app.add_option("--n", n, "vertex count for a freshly sampled complex");
    if (with_dimension) app.add_option("--k", k, "dimension of the sampled complex");
    app.add_option("--p", p, "face probability");
    app.add_option("--c", c, "threshold constant, p = (c/n)^(1/k)");
    app.add_option("--seed", seed, "sampling seed");
  }

  bool from_file() const { return !in.empty(); }

  KComplex load() const {
    if (from_file()) return deserialize_complex(read_file(in));
    if (n <= 0) throw UsageError("give --in FILE or --n with --p or --c");
    if (p.has_value() == c.has_value()) throw UsageError("give exactly one of --p and --c");
    const RandomParams params = c ? RandomParams::from_c(n, k, *c, seed) : RandomParams{n, k, *p, std::nullopt, seed};
    return sample_complex(params);
  }
};

inline void add_common_flags(CLI::App& app, bool& verbose) {
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_flag("--verbose", verbose, "extra diagnostics");
}

inline int cmd_sample(const ComplexSource& src, const std::string& out_path, std::ostream& out) {
  if (src.from_file()) throw UsageError("sample does not take --in");
  const std::string text = serialize_complex(src.load());
  if (out_path.empty()) out << text;
  else write_file(out_path, text);
  return kExitOk;
}

struct FindOptions {
  int t = 4;
  std::optional<double> delta;
  double epsilon = 1.0 / 3.0;
  int max_random_tuples = 200;
  long scan_budget = 10'000;
  std::uint64_t search_seed = 0;
  std::string witness_out;
  std::string witness_in;
  bool oracle = false;
  int max_path_len = -1;
};

inline int cmd_find_minor(const ComplexSource& src, const FindOptions& o, bool verbose, std::ostream& out, std::ostream& err) {
  const KComplex x = src.load();
  if (!o.witness_in.empty()) {
    const MinorWitness w = deserialize_witness(read_file(o.witness_in));
    const Verdict v = verify_minor_witness(x, w);
    out << "valid=" << bool_str(v.ok()) << " reason=" << to_string(v.reason);
    if (!v.detail.empty()) out << " detail=\"" << v.detail << "\"";
    out << "\n";
    return v.ok() ? kExitOk : kExitNegative;
  }
  if (o.oracle) {
    const int len = o.max_path_len < 0 ? x.n() : o.max_path_len;
    const bool hit = oracle::exhaustive_structured_minor_search(x, o.t, len);
    out << "oracle=" << bool_str(hit) << " t=" << o.t << " n=" << x.n() << " max_path_len=" << len << "\n";
    return hit ? kExitOk : kExitNegative;
  }
  if (x.top_face_count() == 0) {
    out << "found=false t=" << o.t << " n=" << x.n() << " faces=0\n";
    return kExitNegative;
  }
  FinderConfig cfg;
  cfg.t = o.t;
  cfg.delta = o.delta;
  cfg.epsilon = o.epsilon;
  cfg.max_random_tuples = o.max_random_tuples;
  cfg.deterministic_scan_budget = o.scan_budget;
  cfg.seed = o.search_seed;
  cfg.c = src.c;
  if (verbose) {
    err << "delta=" << cfg.effective_delta(x.k()) << "\n";
    const auto part = partition_vertices(x.n(), o.t, x.k());
    err << "partition: |U|=" << part.u.size() << " blocks=" << part.blocks.size() << "\n";
  }
  const auto found = find_topological_minor(x, cfg);
  if (!found) {
    out << "found=false t=" << o.t << " n=" << x.n() << "\n";
    return kExitNegative;
  }
  out << "found=true t=" << o.t << " n=" << x.n() << " attempts=" << found->tuple.attempts
      << " phase=" << (found->tuple.from_random_phase ? "random" : "scan") << "\n";
  const std::string wtext = serialize_witness(found->witness);
  if (o.witness_out.empty()) out << wtext;
  else write_file(o.witness_out, wtext);
  return kExitOk;
}

inline int cmd_fill_pi1(const ComplexSource& src, bool oracle_check, bool verbose, std::ostream& out) {
  ComplexSource s = src;
  if (!s.from_file() && !s.p && !s.c) s.c = preset_c(3, 2);
  const KComplex x = s.load();
  if (x.k() != 2) throw Error(ErrorCode::unsupported_dimension, "fill-pi1 needs a 2-complex");
  FillabilityOptions opts;
  if (verbose)
    opts.on_cycle = [&](const CycleStatus& st) {
      out << "cycle " << st.cycle[0] << ' ' << st.cycle[1] << ' ' << st.cycle[2] << ' '
          << (st.is_face ? "face" : st.hub ? "hub=" + std::to_string(*st.hub) : std::string("unfilled")) << "\n";
    };
  const FillabilityReport r = all_three_cycles_fillable(x, opts);
  double p = x.p();
  if (!x.is_sampled()) {
    const double universe = static_cast<double>(binomial(x.n(), 3));
    p = universe > 0 ? static_cast<double>(x.top_face_count()) / universe : 0.0;
  }
  out << "fillable=" << bool_str(r.fillable) << " min_good_set=" << r.min_good_set << " n=" << x.n()
      << " p=" << format_real(p) << " seed=" << (s.from_file() ? std::string("-1") : std::to_string(s.seed)) << "\n";
  if (oracle_check) {
    if (x.n() > kMaxPi1AuditVertices)
      throw Error(ErrorCode::size_guard, "--oracle for fill-pi1 supports n <= " + std::to_string(kMaxPi1AuditVertices));
    const EdgeLinkTable links(x);
    const GoodSetTable table(links);
    bool agree = true;
    for (int b = 2; b <= x.n() && agree; ++b)
      for (int a = 1; a < b && agree; ++a) agree = table.good(a, b) == good_set(x, a, b).good;
    out << "oracle_agree=" << bool_str(agree) << "\n";
    if (!agree) return kExitNegative;
  }
  return r.fillable ? kExitOk : kExitNegative;
}

inline int cmd_surface(const std::string& in, std::ostream& out) {
  if (in.empty()) throw UsageError("surface needs --in FILE");
  const KComplex x = deserialize_complex(read_file(in));
  const SurfaceCheckResult r = surface_check(x);
  out << "closed=" << bool_str(r.is_closed_surface) << " chi=" << r.euler_characteristic
      << " orientable=" << bool_str(r.orientable) << " genus=" << (r.genus ? std::to_string(*r.genus) : std::string("NA"))
      << " f2=" << r.triangle_count;
  if (!r.is_closed_surface) out << " reason=" << to_string(r.reason);
  out << "\n";
  return kExitOk;
}

inline int cmd_enumerate(int l, bool use_oracle, const std::string& out_path, std::ostream& out) {
  const auto all = use_oracle ? oracle::brute_enumerate_triangulations(l, static_cast<int>(euler_face_count(l, 0)))
                              : enumerate_sphere_triangulations(l);
  std::string text;
  for (const auto& tris : all) {
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (i) text += ';';
      text += std::to_string(tris[i][0]) + ' ' + std::to_string(tris[i][1]) + ' ' + std::to_string(tris[i][2]);
    }
    text += '\n';
  }
  if (out_path.empty()) out << text;
  else write_file(out_path, text);
  return kExitOk;
}

inline int cmd_bound(const BoundParams& b, std::ostream& out) {
  out << "closed_form=" << format_real(union_bound_closed_form(b), 17)
      << " direct_sum=" << format_real(union_bound_direct_sum(b), 17) << "\n";
  return kExitOk;
}

struct SweepOptions {
  std::string mode = "minor";
  std::string ns;
  std::string cs;
  int k = 2;
  int t = 4;
  int trials = 10;
  std::uint64_t seed = 0;
  bool repro = false;
  bool independent = false;
  unsigned threads = 0;
  std::string out_path;
  std::optional<double> delta;
  double epsilon = 1.0 / 3.0;
};

inline int cmd_sweep(const SweepOptions& o, bool giant, bool verbose, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  if (giant) {
    cfg.mode = SweepMode::giant;
  } else {
    const auto mode = parse_sweep_mode(o.mode);
    if (!mode || *mode == SweepMode::giant) throw UsageError("--mode must be minor or pi1 (use the giant command)");
    cfg.mode = *mode;
  }
  if (o.ns.empty() || o.cs.empty()) throw UsageError("--n and --c grids are required");
  cfg.ns = parse_list<int>(o.ns, "n");
  cfg.cs = parse_list<double>(o.cs, "c");
  cfg.k = giant ? 1 : o.k;
  cfg.t = o.t;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.repro = o.repro;
  cfg.coupled = !o.independent;
  cfg.threads = o.threads;
  cfg.finder.delta = o.delta;
  cfg.finder.epsilon = o.epsilon;
  if (verbose)
    err << "sweep mode=" << to_string(cfg.mode) << " cells=" << cfg.ns.size() * cfg.cs.size()
        << " trials=" << cfg.trials << " coupled=" << bool_str(cfg.coupled) << "\n";
  const SweepResult r = threshold_sweep(cfg);
  const std::string csv = to_csv(r.rows);
  if (o.out_path.empty()) out << csv;
  else write_file(o.out_path, csv);
  return kExitOk;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    args = expand_config(std::move(args));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Random simplicial complexes: topological minors, fundamental groups, surface census", "mincplx"};
  app.require_subcommand(1);
  bool verbose = false;

  ComplexSource sample_src, find_src, pi1_src;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "sample X^k(n, p) and write it as a face list");
  add_common_flags(*sample, verbose);
  sample_src.attach(*sample, true);
  sample->add_option("--out", sample_out, "output file (default: stdout)");

  FindOptions fo;
  auto* find = app.add_subcommand("find-minor", "search for a subdivision of K_t^k");
  add_common_flags(*find, verbose);
  find_src.attach(*find, true);
  find->add_option("--t", fo.t, "branch vertex count");
  find->add_option("--delta", fo.delta, "connectivity slack");
  find->add_option("--epsilon", fo.epsilon, "component-size slack");
  find->add_option("--max-random-tuples", fo.max_random_tuples, "random tuples before the scan");
  find->add_option("--scan-budget", fo.scan_budget, "tuples examined by the lexicographic scan");
  find->add_option("--search-seed", fo.search_seed, "seed of the random tuple phase");
  find->add_option("--witness-out", fo.witness_out, "write the witness to a file");
  find->add_option("--witness-in", fo.witness_in, "verify a stored witness instead of searching");
  find->add_flag("--oracle", fo.oracle, "run the exhaustive small-n reference search instead");
  find->add_option("--max-path-len", fo.max_path_len, "path length cap for --oracle (default n)");

  bool pi1_oracle = false;
  auto* pi1 = app.add_subcommand("fill-pi1", "check that every 3-cycle of a 2-complex bounds a disk");
  add_common_flags(*pi1, verbose);
  pi1_src.attach(*pi1, false);
  pi1->add_flag("--oracle", pi1_oracle, "cross-check good sets against the graph-based route");

  SweepOptions so, go;
  go.mode = "giant";
  auto* sweep = app.add_subcommand("sweep", "threshold sweep over an (n, c) grid, CSV output");
  add_common_flags(*sweep, verbose);
  sweep->add_option("--mode", so.mode, "minor or pi1");
  sweep->add_option("--n", so.ns, "comma-separated n values");
  sweep->add_option("--c", so.cs, "comma-separated, strictly increasing c values");
  sweep->add_option("--k", so.k, "dimension");
  sweep->add_option("--t", so.t, "branch vertex count (minor mode)");
  sweep->add_option("--trials", so.trials, "trials per cell");
  sweep->add_option("--seed", so.seed, "base seed");
  sweep->add_option("--threads", so.threads, "worker threads (0: automatic)");
  sweep->add_option("--delta", so.delta, "finder connectivity slack");
  sweep->add_option("--epsilon", so.epsilon, "finder component-size slack");
  sweep->add_option("--out", so.out_path, "CSV file (default: stdout)");
  sweep->add_flag("--repro", so.repro, "write wall_ms as 0");
  sweep->add_flag("--independent", so.independent, "fresh samples per cell instead of coupled ones");

  auto* giant = app.add_subcommand("giant", "largest component of G(n, c/n) across a c grid, CSV output");
  add_common_flags(*giant, verbose);
  giant->add_option("--n", go.ns, "comma-separated n values");
  giant->add_option("--c", go.cs, "comma-separated, strictly increasing c values");
  giant->add_option("--trials", go.trials, "trials per cell");
  giant->add_option("--seed", go.seed, "base seed");
  giant->add_option("--threads", go.threads, "worker threads (0: automatic)");
  giant->add_option("--out", go.out_path, "CSV file (default: stdout)");
  giant->add_flag("--repro", go.repro, "write wall_ms as 0");
  giant->add_flag("--independent", go.independent, "fresh samples per cell instead of coupled ones");

  std::string surface_in;
  auto* surface = app.add_subcommand("surface", "decide whether a 2-complex is a closed surface");
  add_common_flags(*surface, verbose);
  surface->add_option("--in", surface_in, "complex file")->required();

  int enum_l = 0;
  bool enum_oracle = false;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "list labeled sphere triangulations on [l]");
  add_common_flags(*enumerate, verbose);
  enumerate->add_option("--l", enum_l, "vertex count, 3..7")->required();
  enumerate->add_flag("--oracle", enum_oracle, "use the unpruned brute-force scan (l <= 6)");
  enumerate->add_option("--out", enum_out, "output file (default: stdout)");

  BoundParams bp;
  auto* bound = app.add_subcommand("bound", "union bound on genus-g triangulations in X^2(n, sqrt(c/n))");
  add_common_flags(*bound, verbose);
  bound->add_option("--n", bp.n, "vertex count")->required();
  bound->add_option("--c", bp.c, "constant c with cK < 1")->required();
  bound->add_option("--K", bp.K, "triangulation-count base");
  bound->add_option("--genus", bp.genus, "surface genus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(sample_src, sample_out, out);
    if (*find) return cmd_find_minor(find_src, fo, verbose, out, err);
    if (*pi1) return cmd_fill_pi1(pi1_src, pi1_oracle, verbose, out);
    if (*sweep) return cmd_sweep(so, false, verbose, out, err);
    if (*giant) return cmd_sweep(go, true, verbose, out, err);
    if (*surface) return cmd_surface(surface_in, out);
    if (*enumerate) return cmd_enumerate(enum_l, enum_oracle, enum_out, out);
    if (*bound) return cmd_bound(bp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mincplx::cli
