#pragma once

#include <vector>

#include "cyclebound/cycles.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

// One 2-edge-connected component's share of the local sum.
struct ComponentShare {
  std::vector<VertexId> vertices;
  Rational phi_subtotal;  // Σ w(e)/C_w(e) over edges inside the component
  Rational bound;         // (|vertices| - 1)/2
};

struct InequalityReport {
  int n = 0;
  int m = 0;
  bool connected = true;
  int component_count = 1;  // connected components
  int bridge_count = 0;
  Rational local_sum;        // Σ_e w(e)/C_w(e)
  Rational bound;            // (n - 1)/2 when connected, (n - #components)/2 otherwise
  Rational gap;              // bound - local_sum; never negative
  bool is_equality = false;  // gap == 0, exact comparison
  std::vector<LocalProfile> profiles;           // indexed by edge
  std::vector<ComponentShare> per_component;    // 2-edge-connected components
};

// φ(e) = w(e)/C_w(e) for every edge; bridges get exactly 1/2.
std::vector<Rational> phi_weighting(const WeightedGraph& g, const SearchLimits& limits = {},
                                    int jobs = 1);
std::vector<Rational> phi_weighting(const std::vector<LocalProfile>& profiles);

// Checks Σ w(e)/C_w(e) ≤ (n−1)/2 and the per-component bounds it decomposes
// into. A violation throws CounterexampleError carrying the instance — that
// event would falsify the theorem, so it aborts loudly rather than returning.
InequalityReport verify_main(const WeightedGraph& g, const SearchLimits& limits = {},
                             int jobs = 1);
InequalityReport verify_main(const WeightedGraph& g, std::vector<LocalProfile> profiles);

// Asserts φ(C) ≤ 1 for every simple cycle by exhaustive enumeration.
// Returns true; throws CounterexampleError on a violating cycle.
bool verify_cycle_phi_bound(const WeightedGraph& g, const SearchLimits& limits = {},
                            int jobs = 1);
bool verify_cycle_phi_bound(const WeightedGraph& g, const std::vector<LocalProfile>& profiles,
                            int enumeration_cap);

struct CycleBoundWitness {
  bool holds = false;
  Rational required;  // the lower bound the cycle had to meet
  CycleWitness cycle; // the heaviest (or longest) cycle found
};

// Bondy–Fan: a 2-edge-connected graph carries a cycle of `weighting`-weight
// at least 2·total/(n−1). `weighting` is indexed by edge and must be positive.
CycleBoundWitness verify_bondy_fan(const WeightedGraph& g,
                                   const std::vector<Rational>& weighting,
                                   const SearchLimits& limits = {});

// Erdős–Gallai: a 2-edge-connected graph has a cycle of length ≥ 2m/(n−1).
CycleBoundWitness verify_erdos_gallai(const WeightedGraph& g, const SearchLimits& limits = {});

struct ThresholdReport {
  Rational threshold;
  Rational light_mass;   // Σ w(e) over edges with C_w(e) ≤ T
  Rational light_bound;  // T(n−1)/2, upper bound on light_mass
  Rational heavy_mass;   // Σ w(e) over edges with C_w(e) > T
  Rational heavy_bound;  // w(G) − T(n−1)/2, lower bound on heavy_mass
};

// Both threshold corollaries at once; violations throw CounterexampleError.
ThresholdReport threshold_mass(const WeightedGraph& g, const Rational& threshold,
                               const SearchLimits& limits = {}, int jobs = 1);
ThresholdReport threshold_mass(const WeightedGraph& g, const Rational& threshold,
                               const std::vector<LocalProfile>& profiles);

struct LightEdgeForest {
  std::vector<int> edges;  // F = {e : C_w(e) < 2w(e)}
  bool acyclic = false;    // always true on return; a cycle in F throws
};

LightEdgeForest light_edge_forest(const WeightedGraph& g, const SearchLimits& limits = {},
                                  int jobs = 1);
LightEdgeForest light_edge_forest(const WeightedGraph& g,
                                  const std::vector<LocalProfile>& profiles);

}  // namespace cyclebound
