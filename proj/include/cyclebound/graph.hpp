#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cyclebound/rational.hpp"

namespace cyclebound {

using VertexId = std::int32_t;

// Undirected weighted edge; u < v after graph construction.
struct Edge {
  VertexId u;
  VertexId v;
  Rational weight;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
  }
};

struct AdjEntry {
  VertexId to;
  int edge;  // index into edges()
};

// Simple undirected graph with strictly positive rational edge weights.
// Immutable after construction; safe to share across threads.
//
// Construction validates simplicity (no loops, no parallel edges), weight
// positivity and index ranges, normalizes each edge to u < v, and sorts
// edges by (u, v) so that serialization is canonical.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }
  const std::vector<AdjEntry>& neighbors(VertexId v) const { return adj_.at(v); }

  // Index of the edge {u, v}, or -1 when absent.
  int edge_between(VertexId u, VertexId v) const;

  bool connected() const { return connected_; }
  int component_count() const { return component_count_; }
  bool is_complete() const;

  Rational total_weight() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;                // sorted by (u, v)
  std::vector<std::vector<AdjEntry>> adj_; // each sorted by (to, edge)
  int component_count_ = 0;
  bool connected_ = false;
};

// Edge-list text format, one record per line, '#' starts a comment:
//   n <N>
//   e <u> <v> <weight>
// with 0 <= u, v < N and weight a positive "p", "p/q" or decimal literal.
// Errors carry the offending line number.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);

// Canonical text: header first, then edges sorted by (u, v).
// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const WeightedGraph& g);

// Same topology, new weights (indexed like g.edges()).
WeightedGraph reweight(const WeightedGraph& g, const std::vector<Rational>& weights);

// Same topology, every weight 1.
WeightedGraph uniform_weights(const WeightedGraph& g);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<VertexId> to_original;  // new vertex id -> original vertex id (ascending)
  std::vector<int> edge_to_original;  // new edge index -> original edge index
};

// Subgraph induced by `vertices` (duplicates rejected), relabeled densely
// in ascending original order.
InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<VertexId> vertices);

}  // namespace cyclebound
