#include "cyclebound/inequality.hpp"

#include <cassert>
#include <numeric>
#include <string>

#include "cyclebound/decomposition.hpp"
#include "cyclebound/errors.hpp"

namespace cyclebound {

std::vector<Rational> phi_weighting(const std::vector<LocalProfile>& profiles) {
  std::vector<Rational> phi;
  phi.reserve(profiles.size());
  for (const LocalProfile& p : profiles) phi.push_back(p.phi);
  return phi;
}

std::vector<Rational> phi_weighting(const WeightedGraph& g, const SearchLimits& limits,
                                    int jobs) {
  return phi_weighting(local_profiles(g, limits, jobs));
}

InequalityReport verify_main(const WeightedGraph& g, std::vector<LocalProfile> profiles) {
  InequalityReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.component_count = g.component_count();
  r.connected = r.component_count == 1;
  r.profiles = std::move(profiles);
  for (const LocalProfile& p : r.profiles) r.local_sum += p.phi;
  r.bound = Rational(r.n - r.component_count, 2);
  r.gap = r.bound - r.local_sum;
  r.is_equality = r.gap.is_zero();

  const TwoEdgeDecomposition dec = two_edge_components(g);
  r.bridge_count = dec.bridge_count;
  r.per_component.resize(dec.components.size());
  for (size_t i = 0; i < dec.components.size(); ++i) {
    ComponentShare& share = r.per_component[i];
    share.vertices = dec.components[i];
    share.bound = Rational(static_cast<long>(share.vertices.size()) - 1, 2);
  }
  for (const LocalProfile& p : r.profiles) {
    if (p.is_bridge) continue;
    r.per_component[dec.component_of[g.edge(p.edge).u]].phi_subtotal += p.phi;
  }

  // The proof's decomposition: the component subtotals plus 1/2 per bridge
  // must reassemble the local sum, and the component orders plus the bridge
  // count must reassemble n minus the number of connected components.
  Rational assembly = Rational(r.bridge_count, 2);
  long order_tally = r.bridge_count;
  for (const ComponentShare& share : r.per_component) {
    if (share.phi_subtotal > share.bound) {
      throw CounterexampleError(
          "component bound violated: a 2-edge-connected component on " +
              std::to_string(share.vertices.size()) + " vertices has phi-subtotal " +
              share.phi_subtotal.str() + " > " + share.bound.str(),
          serialize_graph(g));
    }
    assembly += share.phi_subtotal;
    order_tally += static_cast<long>(share.vertices.size()) - 1;
  }
  assert(assembly == r.local_sum);
  assert(order_tally == r.n - r.component_count);
  (void)assembly;
  (void)order_tally;

  if (r.gap.is_negative()) {
    throw CounterexampleError("main inequality violated: local sum " + r.local_sum.str() +
                                  " exceeds bound " + r.bound.str(),
                              serialize_graph(g));
  }
  return r;
}

InequalityReport verify_main(const WeightedGraph& g, const SearchLimits& limits, int jobs) {
  return verify_main(g, local_profiles(g, limits, jobs));
}

bool verify_cycle_phi_bound(const WeightedGraph& g, const std::vector<LocalProfile>& profiles,
                            int enumeration_cap) {
  const Rational one(1);
  for_each_cycle(g, enumeration_cap, [&](const CycleWitness& c) {
    Rational phi_c;
    for (int e : c.edge_indices(g)) phi_c += profiles[e].phi;
    if (phi_c > one) {
      throw CounterexampleError("cycle phi-weight exceeds 1: phi(C) = " + phi_c.str(),
                                serialize_graph(g));
    }
  });
  return true;
}

bool verify_cycle_phi_bound(const WeightedGraph& g, const SearchLimits& limits, int jobs) {
  return verify_cycle_phi_bound(g, local_profiles(g, limits, jobs), limits.enumeration_cap);
}

namespace {

void require_two_edge_connected(const WeightedGraph& g, const char* what) {
  if (g.vertex_count() < 3 || !g.connected() || find_bridges(g).count() > 0) {
    throw ValidationError(std::string(what) + " requires a 2-edge-connected graph");
  }
}

}  // namespace

CycleBoundWitness verify_bondy_fan(const WeightedGraph& g, const std::vector<Rational>& weighting,
                                   const SearchLimits& limits) {
  require_two_edge_connected(g, "the heavy-cycle bound");
  if (static_cast<int>(weighting.size()) != g.edge_count()) {
    throw ValidationError("weighting size does not match edge count");
  }
  Rational total;
  for (const Rational& w : weighting) total += w;
  CycleBoundWitness out;
  out.required = (Rational(2) * total) / Rational(g.vertex_count() - 1);
  auto [weight, witness] = heaviest_cycle(reweight(g, weighting), limits);
  if (!witness) throw ValidationError("internal: no cycle in a 2-edge-connected graph");
  out.cycle = std::move(*witness);
  out.holds = weight >= out.required;
  return out;
}

CycleBoundWitness verify_erdos_gallai(const WeightedGraph& g, const SearchLimits& limits) {
  require_two_edge_connected(g, "the long-cycle bound");
  std::vector<Rational> ones(g.edge_count(), Rational(1));
  CycleBoundWitness out = verify_bondy_fan(g, ones, limits);
  // With w ≡ 1 the requirement reads: longest cycle length >= 2m/(n-1).
  return out;
}

ThresholdReport threshold_mass(const WeightedGraph& g, const Rational& threshold,
                               const std::vector<LocalProfile>& profiles) {
  if (!threshold.is_positive()) {
    throw ValidationError("threshold must be positive, got " + threshold.str());
  }
  ThresholdReport r;
  r.threshold = threshold;
  for (const LocalProfile& p : profiles) {
    if (p.c_w <= threshold) {
      r.light_mass += g.edge(p.edge).weight;
    } else {
      r.heavy_mass += g.edge(p.edge).weight;
    }
  }
  r.light_bound = threshold * Rational(g.vertex_count() - 1) / Rational(2);
  r.heavy_bound = g.total_weight() - r.light_bound;
  if (r.light_mass > r.light_bound) {
    throw CounterexampleError("threshold bound violated at T = " + threshold.str() +
                                  ": light mass " + r.light_mass.str() + " > " +
                                  r.light_bound.str(),
                              serialize_graph(g));
  }
  if (r.heavy_mass < r.heavy_bound) {
    throw CounterexampleError("complement bound violated at T = " + threshold.str() +
                                  ": heavy mass " + r.heavy_mass.str() + " < " +
                                  r.heavy_bound.str(),
                              serialize_graph(g));
  }
  return r;
}

ThresholdReport threshold_mass(const WeightedGraph& g, const Rational& threshold,
                               const SearchLimits& limits, int jobs) {
  return threshold_mass(g, threshold, local_profiles(g, limits, jobs));
}

LightEdgeForest light_edge_forest(const WeightedGraph& g,
                                  const std::vector<LocalProfile>& profiles) {
  LightEdgeForest f;
  for (const LocalProfile& p : profiles) {
    const Rational twice = g.edge(p.edge).weight + g.edge(p.edge).weight;
    if (p.c_w < twice) f.edges.push_back(p.edge);
  }
  // Union-find acyclicity check over the light edges.
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : f.edges) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) {
      throw CounterexampleError("light-edge set contains a cycle through edge " +
                                    std::to_string(g.edge(e).u) + "-" +
                                    std::to_string(g.edge(e).v),
                                serialize_graph(g));
    }
    parent[a] = b;
  }
  f.acyclic = true;
  assert(static_cast<int>(f.edges.size()) <= g.vertex_count() - 1);
  return f;
}

LightEdgeForest light_edge_forest(const WeightedGraph& g, const SearchLimits& limits, int jobs) {
  return light_edge_forest(g, local_profiles(g, limits, jobs));
}

}  // namespace cyclebound
