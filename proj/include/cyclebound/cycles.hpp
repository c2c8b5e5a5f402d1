#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

// Vertex-count ceilings for the exponential searches. Exceeding one raises
// CapExceededError: results are exact or absent, never approximate.
struct SearchLimits {
  int enumeration_cap = 12;  // whole-graph cycle enumeration
  int search_cap = 15;       // per-edge search; applies to the edge's block
};

// A simple cycle in canonical form: smallest vertex first, its smaller cycle
// neighbor second. Canonical form makes equal cycles compare equal.
struct CycleWitness {
  std::vector<VertexId> vertices;
  Rational weight;

  // Canonicalizes, validates adjacency and distinctness, computes the weight.
  static CycleWitness from_vertices(const WeightedGraph& g, std::vector<VertexId> cycle);

  int length() const { return static_cast<int>(vertices.size()); }
  // Edge indices traversed (including the closing edge); throws if some
  // consecutive pair is not adjacent in g.
  std::vector<int> edge_indices(const WeightedGraph& g) const;
  bool contains_edge(const WeightedGraph& g, int edge) const;
  // Re-derives the weight from g; compare against `weight` to re-validate.
  Rational recompute_weight(const WeightedGraph& g) const;

  bool operator==(const CycleWitness& o) const { return vertices == o.vertices; }
  bool operator<(const CycleWitness& o) const { return vertices < o.vertices; }
};

// Rotates/reflects a vertex sequence into canonical cycle form in place.
void canonicalize_cycle(std::vector<VertexId>& cycle);

// Everything the main inequality needs to know about one edge.
struct LocalProfile {
  int edge = -1;
  bool is_bridge = false;
  Rational c_w;                         // max cycle weight through the edge; 2w(e) on bridges
  std::optional<CycleWitness> witness;  // absent exactly on bridges
  Rational phi;                         // w(e) / c_w
};

// Calls fn for every simple cycle exactly once, canonical form, deterministic
// order (increasing start vertex, then lexicographic continuation).
void for_each_cycle(const WeightedGraph& g, int vertex_cap,
                    const std::function<void(const CycleWitness&)>& fn);
std::vector<CycleWitness> enumerate_cycles(const WeightedGraph& g,
                                           int vertex_cap = SearchLimits{}.enumeration_cap);

// Exact maximum over simple cycles through the given edge. Bridges return
// (2w(e), nullopt) by convention and need no search. Ties are broken toward
// the canonically smallest witness.
std::pair<Rational, std::optional<CycleWitness>> heaviest_cycle_through(
    const WeightedGraph& g, int edge, const SearchLimits& limits = {});

// Exact maximum over all simple cycles; (0, nullopt) on forests.
std::pair<Rational, std::optional<CycleWitness>> heaviest_cycle(
    const WeightedGraph& g, const SearchLimits& limits = {});

// Length of a longest cycle through the edge (the w ≡ 1 specialization);
// 2 for bridges.
int longest_cycle_through(const WeightedGraph& g, int edge, const SearchLimits& limits = {});

// Batch per-edge profiles. Bridges short-circuit; other searches stay inside
// their block. jobs > 1 runs searches concurrently with identical results.
std::vector<LocalProfile> local_profiles(const WeightedGraph& g,
                                         const SearchLimits& limits = {}, int jobs = 1);

struct HamiltonCatalog {
  int r = 0;
  std::vector<CycleWitness> cycles;  // all undirected Hamilton cycles of K_r
  std::vector<long> incidence;       // per edge of K_r (edges in sorted order)
};

// Full Hamilton-cycle catalog of K_r, 3 <= r <= 8. Asserts the count
// identities |cycles| = (r-1)!/2 and incidence ≡ (r-2)!.
HamiltonCatalog hamilton_catalog(int r);

struct TwoOptConnectivity {
  bool connected = false;
  int component_count = 0;
};

// Meta-graph on the Hamilton cycles of K_r (4 <= r <= 7), adjacent when two
// cycles share at least one edge; reports its connectivity.
TwoOptConnectivity two_opt_graph_connected(int r);

}  // namespace cyclebound
