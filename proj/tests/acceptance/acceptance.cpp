// Acceptance suite: one criterion per numbered check, each printed as a
// single [PASS]/[FAIL] line. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <vector>

#include "builders.hpp"
#include "cyclebound/cycles.hpp"
#include "cyclebound/decomposition.hpp"
#include "cyclebound/equality.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/generators.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/inequality.hpp"
#include "cyclebound/json_io.hpp"
#include "subprocess.hpp"

using namespace cyclebound;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

struct Instance {
  WeightedGraph g;
  InequalityReport report;
  std::uint64_t seed = 0;
};

std::vector<Instance> corpus;               // built by criterion 1
std::vector<WeightedGraph> equality_family; // built by criterion 3

int failures = 0;

void criterion(int num, const std::string& label, const std::function<std::string()>& fn) {
  bool ok = true;
  std::string detail;
  try {
    detail = fn();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Independent oracle: one exhaustive cycle sweep per graph, taking the
// per-edge maximum; bridges fall back to the 2w(e) convention.
std::vector<Rational> exhaustive_c_w(const WeightedGraph& g) {
  std::vector<Rational> best(g.edge_count(), Rational(0));
  for_each_cycle(g, g.vertex_count(), [&](const CycleWitness& c) {
    for (int e : c.edge_indices(g)) {
      if (c.weight > best[e]) best[e] = c.weight;
    }
  });
  for (int e = 0; e < g.edge_count(); ++e) {
    if (best[e].is_zero()) best[e] = g.edge(e).weight * Rational(2);
  }
  return best;
}

CliqueWeights weights_of(const WeightedGraph& g) {
  CliqueWeights w;
  for (const Edge& e : g.edges()) w[{e.u, e.v}] = e.weight;
  return w;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

constexpr std::uint64_t kCorpusBase = 0xACCE5501;

std::string build_corpus_and_verify() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t counter = 0;
  int equalities = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      RandomSpec spec;
      spec.n = n;
      spec.seed = derive_seed(kCorpusBase, counter++);
      WeightedGraph g = gen_random_connected(spec);
      InequalityReport report = verify_main(g);  // throws on any violation
      expect(report.local_sum <= report.bound, "local sum exceeds the bound");
      if (report.is_equality) ++equalities;
      corpus.push_back({std::move(g), std::move(report), spec.seed});
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(corpus.size() == 1200, "corpus size mismatch");
  expect(secs < 120.0, "verification exceeded the 120 s budget (" + fmt(secs) + " s)");
  return "1200 instances (n = 3..8), " + std::to_string(equalities) +
         " equalities, verified in " + fmt(secs) + " s";
}

std::string cross_check_c_w() {
  expect(!corpus.empty(), "corpus unavailable");
  long checked = 0;
  for (const Instance& inst : corpus) {
    const std::vector<Rational> oracle = exhaustive_c_w(inst.g);
    for (const LocalProfile& p : inst.report.profiles) {
      expect(p.c_w == oracle[p.edge],
             "C_w mismatch on seed " + std::to_string(inst.seed) + " edge " +
                 std::to_string(p.edge) + ": search " + p.c_w.str() + " vs exhaustive " +
                 oracle[p.edge].str());
      ++checked;
    }
  }
  return std::to_string(checked) + " edge values match exhaustive enumeration";
}

std::string equality_families() {
  equality_family.clear();
  int count = 0;

  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t s = 11; s <= 13; ++s) {
      WeightedGraph t = gen_tree(n, derive_seed(0x7EEE, n * 100 + s));
      InequalityReport r = verify_main(t);
      expect(r.is_equality && r.local_sum == Rational(n - 1, 2), "tree misses equality");
      equality_family.push_back(std::move(t));
      ++count;
    }
  }

  for (int r = 3; r <= 7; ++r) {
    WeightedGraph k = testutil::complete_graph(r);
    InequalityReport rep = verify_main(k);
    expect(rep.is_equality && rep.local_sum == Rational(r - 1, 2), "uniform clique misses equality");
    equality_family.push_back(std::move(k));
    ++count;
  }

  for (int r = 4; r <= 6; ++r) {
    for (int i = 0; i < 20; ++i) {
      Rng rng(derive_seed(0x1D5EED, static_cast<std::uint64_t>(r) * 100 + i));
      std::vector<Rational> a;
      for (int v = 0; v < r; ++v) a.push_back(rng.positive_rational(9, 4));
      if (i % 4 == 0) a[static_cast<size_t>(rng.uniform(0, r - 1))] = Rational(0);
      verify_induced_clique_equality(r, a);  // throws unless every identity holds
      equality_family.push_back(gen_induced_clique(r, a));
      ++count;
    }
  }

  for (std::uint64_t s = 0; s < 50; ++s) {
    WeightedGraph g = gen_block_graph(random_block_graph_spec(5, 5, derive_seed(0xB10C, s)));
    EqualityCertificate cert = certify_equality(g);
    expect(cert.status == EqualityStatus::Equality, "random block graph misses equality");
    equality_family.push_back(std::move(g));
    ++count;
  }

  return std::to_string(count) + " instances across four families all attain (n-1)/2";
}

std::string clique_characterization() {
  int induced_count = 0, perturbed_count = 0;
  for (int r = 4; r <= 6; ++r) {
    for (int i = 0; i < 20; ++i) {
      Rng rng(derive_seed(0xCAFE, static_cast<std::uint64_t>(r) * 1000 + i));
      std::vector<Rational> a;
      for (int v = 0; v < r; ++v) a.push_back(rng.positive_rational(9, 4));
      if (i % 5 == 0) a[static_cast<size_t>(rng.uniform(0, r - 1))] = Rational(0);
      WeightedGraph g = gen_induced_clique(r, a);

      expect(verify_main(g).is_equality, "induced clique misses equality");
      expect(verify_k_r_characterization(g), "characterization rejected an induced clique");
      auto sol = solve_vertex_induced(weights_of(g), r);
      expect(sol.has_value() && sol->all_nonnegative, "recovery failed on an induced clique");
      ++induced_count;

      const int edge = static_cast<int>(rng.uniform(0, g.edge_count() - 1));
      WeightedGraph p = perturb_edge(g, edge, rng.positive_rational(5, 7));
      expect(!verify_main(p).is_equality, "perturbed clique still attains equality");
      expect(!solve_vertex_induced(weights_of(p), r).has_value(),
             "perturbed weights still look vertex-induced");
      expect(verify_k_r_characterization(p), "characterization failed on a strict clique");
      ++perturbed_count;
    }
  }
  return std::to_string(induced_count) + " induced cliques attain equality; " +
         std::to_string(perturbed_count) + " perturbations break both equality and inducedness";
}

std::string hamilton_and_exchange() {
  const long expected_count[] = {0, 0, 0, 1, 3, 12, 60, 360, 2520};
  const long expected_incidence[] = {0, 0, 0, 1, 2, 6, 24, 120, 720};
  for (int r = 3; r <= 8; ++r) {
    HamiltonCatalog cat = hamilton_catalog(r);
    expect(static_cast<long>(cat.cycles.size()) == expected_count[r],
           "Hamilton count off at r = " + std::to_string(r));
    long total = 0;
    for (long inc : cat.incidence) {
      expect(inc == expected_incidence[r], "incidence off at r = " + std::to_string(r));
      total += inc;
    }
    expect(total == expected_count[r] * r, "incidence double count off");
  }
  for (int r = 4; r <= 7; ++r) {
    TwoOptConnectivity conn = two_opt_graph_connected(r);
    expect(conn.connected && conn.component_count == 1,
           "exchange meta-graph disconnected at r = " + std::to_string(r));
  }
  return "counts (r-1)!/2 and incidence (r-2)! for r = 3..8; exchange graph connected for r = 4..7";
}

std::string certificates_on_equality_family() {
  expect(!equality_family.empty(), "equality family unavailable");
  long conditions = 0;
  for (const WeightedGraph& g : equality_family) {
    EqualityCertificate cert = certify_equality(g);
    expect(cert.status == EqualityStatus::Equality, "family member certified strict");
    for (const NecessaryConditionEntry& nc : cert.necessary_conditions) {
      expect(nc.phi_subtotal_tight, "phi subtotal not tight on an equality instance");
      expect(nc.tight_cycle.has_value(), "no tight cycle on an equality instance");
      expect(nc.termwise_tight, "tight cycle not termwise tight");
      ++conditions;
    }
  }
  return std::to_string(equality_family.size()) + " certificates, " +
         std::to_string(conditions) + " component conditions all tight";
}

std::string thresholds_and_forest() {
  expect(!corpus.empty(), "corpus unavailable");
  long threshold_checks = 0, forest_checks = 0;
  for (const Instance& inst : corpus) {
    Rng rng(derive_seed(inst.seed, 2));
    for (int k = 0; k < 3; ++k) {
      const auto& p = inst.report.profiles[static_cast<size_t>(
          rng.uniform(0, inst.g.edge_count() - 1))];
      Rational t = p.c_w;
      const long kind = rng.uniform(0, 2);
      if (kind == 1) t = t * Rational(3, 4);
      if (kind == 2) t = t * Rational(3, 2);
      ThresholdReport rep = threshold_mass(inst.g, t, inst.report.profiles);
      expect(rep.light_mass <= rep.light_bound, "light mass exceeds its bound");
      expect(rep.heavy_mass >= rep.heavy_bound, "heavy mass below its bound");
      ++threshold_checks;
    }
    LightEdgeForest f = light_edge_forest(inst.g, inst.report.profiles);
    expect(f.acyclic, "light edges contain a cycle");
    expect(static_cast<int>(f.edges.size()) <= inst.g.vertex_count() - 1,
           "light-edge forest has more than n - 1 edges");
    ++forest_checks;
  }
  return std::to_string(threshold_checks) + " threshold checks and " +
         std::to_string(forest_checks) + " forest checks hold";
}

std::string cycle_lower_bounds() {
  expect(!corpus.empty(), "corpus unavailable");
  long bondy = 0, erdos = 0;
  for (const Instance& inst : corpus) {
    const std::vector<Rational> phi = phi_weighting(inst.report.profiles);
    TwoEdgeDecomposition dec = two_edge_components(inst.g);
    for (const std::vector<VertexId>& comp : dec.components) {
      if (comp.size() < 3) continue;
      InducedSubgraph sub = induced_subgraph(inst.g, comp);
      std::vector<Rational> sub_phi;
      sub_phi.reserve(sub.edge_to_original.size());
      for (int orig : sub.edge_to_original) sub_phi.push_back(phi[orig]);
      expect(verify_bondy_fan(sub.graph, sub_phi).holds, "weighted cycle bound failed");
      ++bondy;
      expect(verify_erdos_gallai(sub.graph).holds, "length cycle bound failed");
      ++erdos;
    }
  }
  return std::to_string(bondy) + " weighted and " + std::to_string(erdos) +
         " unweighted lower bounds hold on 2-edge-connected parts";
}

std::string unit_weight_block_graphs() {
  expect(!corpus.empty(), "corpus unavailable");
  for (const Instance& inst : corpus) {
    const bool eq = verify_main(uniform_weights(inst.g)).is_equality;
    const bool bg = is_block_graph(inst.g).is_block_graph;
    expect(eq == bg, "unit-weight equality disagrees with block-graph shape on seed " +
                         std::to_string(inst.seed));
  }

  // Curated shapes on top of the corpus.
  for (std::uint64_t s = 0; s < 10; ++s) {
    WeightedGraph g =
        uniform_weights(gen_block_graph(random_block_graph_spec(4, 5, derive_seed(0xB1, s))));
    expect(verify_main(g).is_equality, "unit-weight block graph strict");
  }
  expect(!verify_main(testutil::cycle_graph(4)).is_equality, "C4 should be strict");
  expect(!verify_main(testutil::cycle_graph(5)).is_equality, "C5 should be strict");
  expect(!verify_main(testutil::theta_graph()).is_equality, "theta should be strict");
  return "equality iff block graph on all 1200 unit-weight instances plus curated shapes";
}

std::string determinism() {
  expect(corpus.size() >= 10, "corpus unavailable");
  for (size_t i = 0; i < corpus.size(); i += 120) {
    const WeightedGraph& g = corpus[i].g;
    InequalityReport serial = verify_main(g, {}, 1);
    InequalityReport parallel = verify_main(g, {}, 4);
    expect(report_to_json(g, serial).dump() == report_to_json(g, parallel).dump(),
           "thread count changed a report");
  }

  const std::string path = "/tmp/acceptance-" + std::to_string(::getpid()) + ".graph";
  {
    std::ofstream out(path);
    out << serialize_graph(corpus[600].g);
  }
  testutil::RunResult a = testutil::run_cli("--json verify " + path);
  testutil::RunResult b = testutil::run_cli("--json verify " + path);
  testutil::RunResult c = testutil::run_cli("--jobs 4 --json verify " + path);
  std::remove(path.c_str());
  expect(a.exit_code == 0, "cli verify failed");
  expect(a.out == b.out, "cli verify output differs between runs");
  expect(a.out == c.out, "cli verify output differs under --jobs 4");

  testutil::RunResult f1 = testutil::run_cli("--json fuzz --n-max 5 --trials 2 --seed 4242");
  testutil::RunResult f2 =
      testutil::run_cli("--json fuzz --n-max 5 --trials 2 --seed 4242 --jobs 3");
  expect(f1.exit_code == 0 && f1.out == f2.out, "fuzz output not deterministic per seed");
  return "reports byte-identical across runs and thread counts (library and CLI)";
}

}  // namespace

int main() {
  criterion(1, "random corpus verifies the main inequality within the time budget",
            build_corpus_and_verify);
  criterion(2, "per-edge heaviest-cycle values match exhaustive enumeration", cross_check_c_w);
  criterion(3, "equality families attain the bound: trees, cliques, induced cliques, block graphs",
            equality_families);
  criterion(4, "complete graphs: equality exactly for vertex-induced nonnegative weightings",
            clique_characterization);
  criterion(5, "Hamilton catalog counts, incidence, and exchange connectivity",
            hamilton_and_exchange);
  criterion(6, "equality certificates satisfy every necessary condition",
            certificates_on_equality_family);
  criterion(7, "threshold mass bounds hold and light edges form a forest", thresholds_and_forest);
  criterion(8, "cycle lower bounds hold on every 2-edge-connected part", cycle_lower_bounds);
  criterion(9, "unit weights attain equality exactly on block graphs", unit_weight_block_graphs);
  criterion(10, "output is deterministic across runs and thread counts", determinism);

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
