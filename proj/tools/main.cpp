// cyclebound: batch verification, analysis, generation and fuzzing for the
// heaviest-cycle inequality sum w(e)/C_w(e) <= (n-1)/2.
//
// Exit codes: 0 ok; 2 unreadable input or invalid parameters; 3 a verified
// inequality failed (counterexample — never expected on valid code); 4 the
// instance exceeds the configured exact-search caps.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclebound/cycles.hpp"
#include "cyclebound/decomposition.hpp"
#include "cyclebound/equality.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/generators.hpp"
#include "cyclebound/inequality.hpp"
#include "cyclebound/json_io.hpp"

namespace {

using namespace cyclebound;

constexpr double kTightTolerance = 1e-9;

struct Options {
  std::string mode = "exact";
  bool json = false;
  int enum_cap = 12;
  int search_cap = 15;
  int jobs = 1;

  SearchLimits limits() const {
    return {.enumeration_cap = enum_cap, .search_cap = search_cap};
  }
  ValueMode value_mode() const {
    return mode == "float" ? ValueMode::Float : ValueMode::Exact;
  }
};

// Float values render exactly as nlohmann prints them so that text and JSON
// output never disagree on a value.
std::string show(const Rational& v, ValueMode mode) {
  if (mode == ValueMode::Exact) return v.str();
  return Json(v.to_double()).dump();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string vertex_set(const std::vector<VertexId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string cycle_str(const CycleWitness& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.vertices[i]);
  }
  return out + ")";
}

bool numerically_tight(const InequalityReport& r) {
  return std::fabs(r.gap.to_double()) < kTightTolerance;
}

// Reads either the edge-list text format or a {"n":..,"edges":[..]} JSON
// document; "-" reads standard input.
WeightedGraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  }
  return parse_graph(text);
}

void print_graph(const WeightedGraph& g, const Options& opt) {
  if (opt.json) {
    std::cout << graph_to_json(g).dump(2) << "\n";
  } else {
    std::cout << serialize_graph(g);
  }
}

void print_report_text(std::ostream& os, const WeightedGraph& g, const InequalityReport& r,
                       ValueMode mode) {
  os << "n = " << r.n << ", m = " << r.m;
  if (r.connected) {
    os << ", connected";
  } else {
    os << ", disconnected (" << r.component_count << " components)";
  }
  os << "\n";
  os << "bridges: " << r.bridge_count << "\n";
  os << "local_sum = " << show(r.local_sum, mode) << "\n";
  os << "bound = " << show(r.bound, mode) << "\n";
  os << "gap = " << show(r.gap, mode) << "\n";
  if (mode == ValueMode::Exact) {
    os << "equality: " << yesno(r.is_equality) << "\n";
  } else {
    os << "numerically tight: " << yesno(numerically_tight(r)) << "\n";
  }
  os << "edges:\n";
  for (const LocalProfile& p : r.profiles) {
    const Edge& e = g.edge(p.edge);
    os << "  " << e.u << "-" << e.v << "  w = " << show(e.weight, mode)
       << "  C_w = " << show(p.c_w, mode) << "  phi = " << show(p.phi, mode);
    if (p.is_bridge) os << "  (bridge)";
    os << "\n";
  }
  os << "components:\n";
  for (const ComponentShare& s : r.per_component) {
    os << "  " << vertex_set(s.vertices) << "  phi_subtotal = " << show(s.phi_subtotal, mode)
       << "  bound = " << show(s.bound, mode) << "\n";
  }
}

void print_certificate_text(std::ostream& os, const EqualityCertificate& c, ValueMode mode) {
  std::string status = c.status == EqualityStatus::Equality
                           ? (mode == ValueMode::Exact ? "Equality" : "NumericallyTight")
                           : "Strict";
  os << "certificate: " << status;
  if (c.route) {
    os << " via "
       << (*c.route == EqualityRoute::BlockGraphInduced ? "BlockGraphInduced" : "Other");
  }
  os << "\n";
  for (const BlockCertificate& b : c.per_block) {
    os << "  block " << vertex_set(b.vertices) << ": ";
    if (b.unconstrained) {
      os << "unconstrained\n";
    } else if (b.solution) {
      os << "a = [";
      for (std::size_t i = 0; i < b.solution->a.size(); ++i) {
        if (i) os << ", ";
        os << show(b.solution->a[i], mode);
      }
      os << "]\n";
    } else {
      os << "no induced solution\n";
    }
  }
  if (!c.necessary_conditions.empty()) {
    os << "necessary conditions:\n";
    for (const NecessaryConditionEntry& e : c.necessary_conditions) {
      os << "  component " << vertex_set(e.vertices)
         << ": phi tight: " << yesno(e.phi_subtotal_tight) << ", tight cycle: "
         << (e.tight_cycle ? cycle_str(*e.tight_cycle) : std::string("none"))
         << ", termwise tight: " << yesno(e.termwise_tight) << "\n";
    }
  }
}

int cmd_verify(const std::string& path, const Options& opt) {
  WeightedGraph g = load_graph(path);
  InequalityReport report = verify_main(g, opt.limits(), opt.jobs);
  if (opt.json) {
    std::cout << report_to_json(g, report, opt.value_mode()).dump(2) << "\n";
  } else {
    print_report_text(std::cout, g, report, opt.value_mode());
  }
  return 0;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& thresholds,
                const Options& opt) {
  WeightedGraph g = load_graph(path);
  const SearchLimits limits = opt.limits();
  const ValueMode mode = opt.value_mode();

  BridgeSet bridges = find_bridges(g);
  BlockDecomposition blocks = block_decomposition(g);
  BlockGraphCheck bg = is_block_graph(g);
  EqualityCertificate cert = certify_equality(g, limits, opt.jobs);
  LightEdgeForest forest = light_edge_forest(g, cert.report.profiles);
  std::vector<ThresholdReport> mass;
  mass.reserve(thresholds.size());
  for (const std::string& t : thresholds) {
    mass.push_back(threshold_mass(g, Rational::parse(t), cert.report.profiles));
  }

  if (opt.json) {
    Json jbridges = Json::array();
    for (int idx : bridges.bridges) {
      jbridges.push_back(Json::array({g.edge(idx).u, g.edge(idx).v}));
    }
    Json jblocks = Json::array();
    for (const Block& b : blocks.blocks) {
      jblocks.push_back(Json{{"vertices", b.vertices}, {"bridge", b.is_bridge_block()}});
    }
    Json jlight = Json::array();
    for (int idx : forest.edges) {
      jlight.push_back(Json::array({g.edge(idx).u, g.edge(idx).v}));
    }
    Json jmass = Json::array();
    for (const ThresholdReport& t : mass) jmass.push_back(threshold_to_json(t, mode));
    Json out{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"bridges", std::move(jbridges)},
             {"blocks", std::move(jblocks)},
             {"cut_vertices", blocks.cut_vertices},
             {"block_graph", bg.is_block_graph},
             {"report", report_to_json(g, cert.report, mode)},
             {"certificate", certificate_to_json(cert, mode)},
             {"light_edges", std::move(jlight)},
             {"light_forest_acyclic", forest.acyclic},
             {"thresholds", std::move(jmass)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::ostream& os = std::cout;
  print_report_text(os, g, cert.report, mode);
  os << "bridge edges:";
  if (bridges.bridges.empty()) os << " none";
  for (int idx : bridges.bridges) os << " " << g.edge(idx).u << "-" << g.edge(idx).v;
  os << "\n";
  os << "blocks (" << blocks.blocks.size() << "):\n";
  for (const Block& b : blocks.blocks) {
    os << "  " << vertex_set(b.vertices) << (b.is_bridge_block() ? "  (bridge)" : "") << "\n";
  }
  os << "cut vertices:";
  if (blocks.cut_vertices.empty()) os << " none";
  for (VertexId v : blocks.cut_vertices) os << " " << v;
  os << "\n";
  os << "block graph: " << yesno(bg.is_block_graph) << "\n";
  print_certificate_text(os, cert, mode);
  os << "light edges (C_w < 2w):";
  if (forest.edges.empty()) os << " none";
  for (int idx : forest.edges) os << " " << g.edge(idx).u << "-" << g.edge(idx).v;
  os << "  -- acyclic: " << yesno(forest.acyclic) << "\n";
  for (const ThresholdReport& t : mass) {
    os << "threshold " << show(t.threshold, mode) << ": light mass " << show(t.light_mass, mode)
       << " <= " << show(t.light_bound, mode) << ", heavy mass " << show(t.heavy_mass, mode)
       << " >= " << show(t.heavy_bound, mode) << "\n";
  }
  return 0;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

int cmd_generate_block_graph(const std::string& spec_path, bool have_seed, std::uint64_t seed,
                             int max_blocks, int max_block_size, const Options& opt) {
  BlockGraphSpec spec;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw ParseError("cannot open " + spec_path);
    try {
      spec = block_graph_spec_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  } else if (have_seed) {
    spec = random_block_graph_spec(max_blocks, max_block_size, seed);
  } else {
    throw ValidationError("generate block-graph needs --spec or --seed");
  }
  WeightedGraph g = gen_block_graph(spec);

  // Every valid spec is an equality instance; certify before emitting.
  EqualityCertificate cert = certify_equality(g, opt.limits(), opt.jobs);
  if (cert.status != EqualityStatus::Equality) {
    throw CounterexampleError("generated block graph is not an equality instance",
                              serialize_graph(g));
  }
  std::cerr << "certified: equality, local_sum = " << cert.report.local_sum.str() << " = ("
            << g.vertex_count() << "-1)/2\n";
  print_graph(g, opt);
  return 0;
}

struct FuzzTally {
  long instances = 0;
  long main_checks = 0;
  long cycle_checks = 0;
  long forest_checks = 0;
  long threshold_checks = 0;
  long bondy_checks = 0;
  long equality_instances = 0;
  bool have_min = false;
  Rational min_gap;
  int min_gap_n = 0;
  std::uint64_t min_gap_seed = 0;
};

void fuzz_one(const WeightedGraph& g, std::uint64_t inst_seed, const Options& opt,
              FuzzTally& tally) {
  const SearchLimits limits = opt.limits();
  InequalityReport report = verify_main(g, limits, opt.jobs);
  ++tally.main_checks;
  verify_cycle_phi_bound(g, report.profiles, limits.enumeration_cap);
  ++tally.cycle_checks;
  light_edge_forest(g, report.profiles);
  ++tally.forest_checks;

  // Threshold corollary at T = C_w(e) for a random edge, and at 3/4 and 3/2
  // of it — exercises the boundary case T equal to an attained C_w value.
  Rng rng(derive_seed(inst_seed, 1));
  for (int k = 0; k < 3; ++k) {
    int idx = static_cast<int>(rng.uniform(0, g.edge_count() - 1));
    Rational t = report.profiles[idx].c_w;
    long kind = rng.uniform(0, 2);
    if (kind == 1) t *= Rational(3, 4);
    if (kind == 2) t *= Rational(3, 2);
    threshold_mass(g, t, report.profiles);
    ++tally.threshold_checks;
  }

  // Bondy–Fan under the phi-weighting on every 2-edge-connected component.
  std::vector<Rational> phi = phi_weighting(report.profiles);
  TwoEdgeDecomposition dec = two_edge_components(g);
  for (const std::vector<VertexId>& comp : dec.components) {
    if (comp.size() < 3) continue;
    InducedSubgraph sub = induced_subgraph(g, comp);
    std::vector<Rational> sub_phi;
    sub_phi.reserve(sub.edge_to_original.size());
    for (int orig : sub.edge_to_original) sub_phi.push_back(phi[orig]);
    CycleBoundWitness bf = verify_bondy_fan(sub.graph, sub_phi, limits);
    if (!bf.holds) {
      throw CounterexampleError("Bondy-Fan cycle bound failed under the phi-weighting",
                                serialize_graph(g));
    }
    ++tally.bondy_checks;
  }

  ++tally.instances;
  if (report.is_equality) ++tally.equality_instances;
  if (!tally.have_min || report.gap < tally.min_gap) {
    tally.have_min = true;
    tally.min_gap = report.gap;
    tally.min_gap_n = report.n;
    tally.min_gap_seed = inst_seed;
  }
}

int cmd_fuzz(int n_max, long trials, std::uint64_t seed, const Options& opt) {
  if (n_max < 3) throw ValidationError("fuzz needs --n-max >= 3");
  if (trials < 0) throw ValidationError("fuzz needs --trials >= 0");
  if (n_max > opt.enum_cap) {
    throw CapExceededError("fuzz requires n_max <= the enumeration cap (n_max = " +
                           std::to_string(n_max) + ", cap = " + std::to_string(opt.enum_cap) +
                           ")");
  }

  FuzzTally tally;
  std::uint64_t counter = 0;
  for (int n = 3; n <= n_max; ++n) {
    for (long t = 0; t < trials; ++t) {
      std::uint64_t inst_seed = derive_seed(seed, counter++);
      RandomSpec spec;
      spec.n = n;
      spec.seed = inst_seed;
      WeightedGraph g = gen_random_connected(spec);
      try {
        fuzz_one(g, inst_seed, opt, tally);
      } catch (const CounterexampleError& e) {
        std::string name = "counterexample-seed-" + std::to_string(inst_seed) + ".graph";
        std::ofstream out(name);
        out << "# " << e.what() << "\n# instance seed " << inst_seed << "\n"
            << e.instance_text();
        std::cerr << "COUNTEREXAMPLE: " << e.what() << "\ninstance written to " << name << "\n";
        return 3;
      }
    }
  }

  const ValueMode mode = opt.value_mode();
  if (opt.json) {
    Json out{{"n_min", 3},
             {"n_max", n_max},
             {"trials_per_n", trials},
             {"seed", seed},
             {"instances", tally.instances},
             {"checks",
              Json{{"main", tally.main_checks},
                   {"cycle_bound", tally.cycle_checks},
                   {"forest", tally.forest_checks},
                   {"threshold", tally.threshold_checks},
                   {"bondy_fan", tally.bondy_checks}}},
             {"equality_instances", tally.equality_instances}};
    if (tally.have_min) {
      out["min_gap"] = mode == ValueMode::Exact ? Json(tally.min_gap.str())
                                                : Json(tally.min_gap.to_double());
      out["min_gap_n"] = tally.min_gap_n;
      out["min_gap_seed"] = tally.min_gap_seed;
    } else {
      out["min_gap"] = nullptr;
    }
    out["status"] = "ok";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fuzz: n in [3, " << n_max << "], " << trials << " trials per n, seed " << seed
              << "\n";
    std::cout << "instances: " << tally.instances << "\n";
    std::cout << "checks: main " << tally.main_checks << ", cycle-bound " << tally.cycle_checks
              << ", forest " << tally.forest_checks << ", threshold " << tally.threshold_checks
              << ", bondy-fan " << tally.bondy_checks << "\n";
    std::cout << "equality instances: " << tally.equality_instances << "\n";
    if (tally.have_min) {
      std::cout << "min gap: " << show(tally.min_gap, mode) << " (n = " << tally.min_gap_n
                << ", instance seed " << tally.min_gap_seed << ")\n";
    }
    std::cout << "all checks passed\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heaviest-cycle inequality toolkit: verify, analyze, generate, fuzz"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--mode", opt.mode, "value rendering: exact rationals or doubles")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_option("--enum-cap", opt.enum_cap, "max n for exhaustive cycle enumeration")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();
  app.add_option("--search-cap", opt.search_cap, "max block size for heaviest-cycle search")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads for per-edge searches")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check the main inequality on a graph file");
  std::string verify_path;
  verify->add_option("file", verify_path, "graph file (text or JSON; - for stdin)")->required();

  CLI::App* analyze = app.add_subcommand(
      "analyze", "decomposition, equality certificate, light-edge forest, threshold masses");
  std::string analyze_path;
  std::vector<std::string> thresholds;
  analyze->add_option("file", analyze_path, "graph file (text or JSON; - for stdin)")->required();
  analyze->add_option("--threshold", thresholds,
                      "positive rational T for the threshold-mass corollary (repeatable)");

  CLI::App* generate = app.add_subcommand("generate", "emit a graph instance on stdout");
  generate->require_subcommand(1);

  CLI::App* gen_tree_cmd = generate->add_subcommand("tree", "random tree");
  int tree_n = 0;
  std::uint64_t tree_seed = 0;
  gen_tree_cmd->add_option("--n", tree_n, "vertex count")->required();
  gen_tree_cmd->add_option("--seed", tree_seed, "random seed")->required();

  CLI::App* gen_clique_cmd =
      generate->add_subcommand("induced-clique", "K_r with w(uv) = (a(u)+a(v))/2");
  int clique_r = 0;
  std::string clique_a;
  gen_clique_cmd->add_option("--r", clique_r, "clique order (>= 3)")->required();
  gen_clique_cmd->add_option("--a", clique_a, "comma-separated nonnegative vertex values")
      ->required();

  CLI::App* gen_block_cmd =
      generate->add_subcommand("block-graph", "block graph (certified equality instance)");
  std::string block_spec_path;
  std::uint64_t block_seed = 0;
  int max_blocks = 5;
  int max_block_size = 5;
  gen_block_cmd->add_option("--spec", block_spec_path, "block-graph spec JSON file");
  CLI::Option* block_seed_opt =
      gen_block_cmd->add_option("--seed", block_seed, "draw a random spec from this seed");
  gen_block_cmd->add_option("--max-blocks", max_blocks, "random spec: max block count")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  gen_block_cmd->add_option("--max-block-size", max_block_size, "random spec: max block size")
      ->check(CLI::Range(2, 16))
      ->capture_default_str();

  CLI::App* gen_random_cmd =
      generate->add_subcommand("random", "connected graph with random rational weights");
  RandomSpec random_spec;
  long random_m = 0;
  double random_p = 0.0;
  gen_random_cmd->add_option("--n", random_spec.n, "vertex count")->required();
  CLI::Option* m_opt = gen_random_cmd->add_option("--m", random_m, "exact edge count");
  CLI::Option* p_opt =
      gen_random_cmd->add_option("--p", random_p, "edge density in [0, 1]")->excludes(m_opt);
  m_opt->excludes(p_opt);
  gen_random_cmd->add_option("--num-max", random_spec.num_max, "weight numerators from [1, N]")
      ->check(CLI::Range(1L, 1000000L))
      ->capture_default_str();
  gen_random_cmd->add_option("--den-max", random_spec.den_max, "denominators from [1, D]")
      ->check(CLI::Range(1L, 1000000L))
      ->capture_default_str();
  gen_random_cmd->add_option("--seed", random_spec.seed, "random seed")->required();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "random instances per n in [3, n-max]; verify everything; exit 3 on a violation");
  int fuzz_n_max = 0;
  long fuzz_trials = 0;
  std::uint64_t fuzz_seed = 0;
  fuzz->add_option("--n-max", fuzz_n_max, "largest instance size")->required();
  fuzz->add_option("--trials", fuzz_trials, "instances per n")->required();
  fuzz->add_option("--seed", fuzz_seed, "base seed; instances derive from it")->required();

  // Global flags (--json, --jobs, ...) are accepted after the subcommand too.
  for (CLI::App* sub : {verify, analyze, generate, gen_tree_cmd, gen_clique_cmd, gen_block_cmd,
                        gen_random_cmd, fuzz}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_path, opt);
    if (analyze->parsed()) return cmd_analyze(analyze_path, thresholds, opt);
    if (gen_tree_cmd->parsed()) {
      print_graph(gen_tree(tree_n, tree_seed), opt);
      return 0;
    }
    if (gen_clique_cmd->parsed()) {
      print_graph(gen_induced_clique(clique_r, parse_rational_list(clique_a)), opt);
      return 0;
    }
    if (gen_block_cmd->parsed()) {
      return cmd_generate_block_graph(block_spec_path, block_seed_opt->count() > 0, block_seed,
                                      max_blocks, max_block_size, opt);
    }
    if (gen_random_cmd->parsed()) {
      if (m_opt->count() > 0) random_spec.m = random_m;
      if (p_opt->count() > 0) random_spec.edge_probability = random_p;
      print_graph(gen_random_connected(random_spec), opt);
      return 0;
    }
    if (fuzz->parsed()) return cmd_fuzz(fuzz_n_max, fuzz_trials, fuzz_seed, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n"
              << "hint: raise --enum-cap (cycle enumeration) or --search-cap (per-block "
                 "search) to allow larger exact instances\n";
    return 4;
  } catch (const CounterexampleError& e) {
    std::cerr << "COUNTEREXAMPLE: " << e.what() << "\ninstance:\n" << e.instance_text();
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
