#include "cyclebound/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace cyclebound {

BridgeSet find_bridges(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  BridgeSet result;
  result.is_bridge.assign(g.edge_count(), 0);

  struct Frame {
    VertexId v;
    int parent_edge;
    size_t next;
  };
  int timer = 0;
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const AdjEntry a = adj[f.next++];
        if (a.edge == f.parent_edge) continue;
        if (disc[a.to] == -1) {
          disc[a.to] = low[a.to] = timer++;
          stack.push_back({a.to, a.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) result.is_bridge[done.parent_edge] = 1;
        }
      }
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (result.is_bridge[i]) result.bridges.push_back(i);
  }
  return result;
}

TwoEdgeDecomposition two_edge_components(const WeightedGraph& g) {
  const BridgeSet bridges = find_bridges(g);
  const int n = g.vertex_count();

  TwoEdgeDecomposition result;
  result.bridge_count = bridges.count();
  result.component_of.assign(n, -1);

  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (result.component_of[s] != -1) continue;
    const int id = static_cast<int>(result.components.size());
    result.components.emplace_back();
    result.component_of[s] = id;
    queue.assign(1, s);
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      result.components[id].push_back(v);
      for (const auto& a : g.neighbors(v)) {
        if (bridges.is_bridge[a.edge]) continue;
        if (result.component_of[a.to] == -1) {
          result.component_of[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
    std::sort(result.components[id].begin(), result.components[id].end());
  }
  return result;
}

BlockDecomposition block_decomposition(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  BlockDecomposition result;
  result.block_of_edge.assign(g.edge_count(), -1);

  struct Frame {
    VertexId v;
    int parent_edge;
    size_t next;
  };
  int timer = 0;
  std::vector<Frame> stack;
  std::vector<int> edge_stack;

  auto emit_block = [&](int up_to_edge) {
    Block block;
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      block.edges.push_back(e);
      if (e == up_to_edge) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    for (int e : block.edges) {
      block.vertices.push_back(g.edge(e).u);
      block.vertices.push_back(g.edge(e).v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    const int id = static_cast<int>(result.blocks.size());
    for (int e : block.edges) result.block_of_edge[e] = id;
    result.blocks.push_back(std::move(block));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const AdjEntry a = adj[f.next++];
        if (a.edge == f.parent_edge) continue;
        if (disc[a.to] == -1) {
          edge_stack.push_back(a.edge);
          disc[a.to] = low[a.to] = timer++;
          stack.push_back({a.to, a.edge, 0});
        } else if (disc[a.to] < disc[f.v]) {
          // Back edge to an ancestor; seen once from this side only.
          edge_stack.push_back(a.edge);
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] >= disc[parent.v]) emit_block(done.parent_edge);
        }
      }
    }
  }

  // Cut vertices are exactly the vertices lying in two or more blocks.
  std::vector<int> membership(n, 0);
  for (const auto& block : result.blocks) {
    for (VertexId v : block.vertices) ++membership[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (membership[v] >= 2) result.cut_vertices.push_back(v);
  }
  return result;
}

BlockGraphCheck is_block_graph(const WeightedGraph& g) {
  BlockGraphCheck check{true, g.connected(), std::nullopt, std::nullopt};
  if (!check.connected) check.is_block_graph = false;

  const BlockDecomposition dec = block_decomposition(g);
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    const Block& block = dec.blocks[i];
    const auto k = static_cast<long>(block.vertices.size());
    if (static_cast<long>(block.edges.size()) == k * (k - 1) / 2) continue;
    check.is_block_graph = false;
    check.offending_block = static_cast<int>(i);
    for (size_t a = 0; a < block.vertices.size() && !check.missing_edge; ++a) {
      for (size_t b = a + 1; b < block.vertices.size(); ++b) {
        if (g.edge_between(block.vertices[a], block.vertices[b]) == -1) {
          check.missing_edge = {block.vertices[a], block.vertices[b]};
          break;
        }
      }
    }
    break;
  }
  return check;
}

}  // namespace cyclebound
