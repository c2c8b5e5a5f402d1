#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

struct BridgeSet {
  std::vector<int> bridges;     // sorted edge indices
  std::vector<char> is_bridge;  // per edge

  int count() const { return static_cast<int>(bridges.size()); }
};

// An edge is a bridge iff removing it increases the component count.
// Lowlink DFS, iterative.
BridgeSet find_bridges(const WeightedGraph& g);

// Components of G - B where B is the bridge set. Each component is
// 2-edge-connected or a single vertex. For connected G the classic
// accounting holds: k = |B| + 1 and sum_i (n_i - 1) + |B| = n - 1.
struct TwoEdgeDecomposition {
  std::vector<std::vector<VertexId>> components;  // partition of V, each sorted, ordered by min vertex
  std::vector<int> component_of;                  // per vertex
  int bridge_count;
};

TwoEdgeDecomposition two_edge_components(const WeightedGraph& g);

struct Block {
  std::vector<VertexId> vertices;  // sorted
  std::vector<int> edges;          // sorted edge indices

  bool is_bridge_block() const { return edges.size() == 1; }
};

// Maximal biconnected subgraphs; bridge edges appear as 2-vertex blocks, so
// every edge lies in exactly one block and, on connected inputs,
// sum over blocks of (|V(B)| - 1) = n - 1. Isolated vertices join no block.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // sorted; vertices lying in >= 2 blocks
  std::vector<int> block_of_edge;      // per edge
};

BlockDecomposition block_decomposition(const WeightedGraph& g);

struct BlockGraphCheck {
  bool is_block_graph;  // connected and every block induces a clique
  bool connected;
  std::optional<int> offending_block;                         // a block missing a chord
  std::optional<std::pair<VertexId, VertexId>> missing_edge;  // a pair it lacks
};

BlockGraphCheck is_block_graph(const WeightedGraph& g);

}  // namespace cyclebound
