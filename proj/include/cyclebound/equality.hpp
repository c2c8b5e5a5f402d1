#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cyclebound/inequality.hpp"

namespace cyclebound {

// Edge weights of a clique keyed by vertex pair (u < v), vertices 0..r-1.
using CliqueWeights = std::map<std::pair<VertexId, VertexId>, Rational>;

struct InducedSolution {
  std::vector<Rational> a;  // per vertex 0..r-1; w(uv) = (a(u)+a(v))/2
  bool all_nonnegative = false;
};

// Recovers vertex values from clique edge weights when the weighting is
// vertex-induced; nullopt when the overdetermined system is inconsistent.
// r = 3 is always solvable (possibly with negative entries).
std::optional<InducedSolution> solve_vertex_induced(const CliqueWeights& weights, int r);

// Builds the induced K_r for a ≥ 0 (r ≥ 4) and certifies the equality facts:
// C_w(e) = Σa on every edge, local_sum = (r−1)/2, total weight = (r−1)Σa/2.
InequalityReport verify_induced_clique_equality(int r, const std::vector<Rational>& a,
                                                const SearchLimits& limits = {});

enum class EqualityStatus { Equality, Strict };
enum class EqualityRoute { BlockGraphInduced, Other };

struct BlockCertificate {
  std::vector<VertexId> vertices;
  std::optional<InducedSolution> solution;  // for clique blocks of size ≥ 4
  bool unconstrained = false;               // triangles and bridges
};

struct NecessaryConditionEntry {
  std::vector<VertexId> vertices;            // a 2-edge-connected component, ≥1 edge
  bool phi_subtotal_tight = false;           // (i)  φ(H) = (n_H − 1)/2
  std::optional<CycleWitness> tight_cycle;   // (ii) a cycle with φ(C) = 1
  bool termwise_tight = false;               // (iii) C_w(e) = w(C) along that cycle
};

struct EqualityCertificate {
  EqualityStatus status = EqualityStatus::Strict;
  std::optional<EqualityRoute> route;  // present exactly when status == Equality
  std::vector<BlockCertificate> per_block;
  std::vector<NecessaryConditionEntry> necessary_conditions;
  InequalityReport report;
};

// Full equality analysis. On equality instances the block-graph route must
// produce induced solutions for every block of size ≥ 4 and the necessary
// conditions must all hold — failures throw CounterexampleError. On strict
// instances the diagnostics are informational.
EqualityCertificate certify_equality(const WeightedGraph& g, const SearchLimits& limits = {},
                                     int jobs = 1);

// The complete-graph biconditional: equality ⇔ the weights are vertex-induced
// with a ≥ 0; on equality also C_w ≡ W and φ = w/W induced. Throws
// CounterexampleError if either direction fails. 4 ≤ r ≤ 7.
bool verify_k_r_characterization(const WeightedGraph& g, const SearchLimits& limits = {});

// If all Hamilton cycles of (K_r, weighting) have equal weight, the weighting
// must be induced (negative vertex values allowed) and the 2-opt exchange
// identity must hold on every vertex quadruple. Vacuously true otherwise.
bool verify_hamilton_equal_weight_implies_induced(int r, const CliqueWeights& weighting);

}  // namespace cyclebound
