#include "cyclebound/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "cyclebound/decomposition.hpp"
#include "cyclebound/errors.hpp"

namespace cyclebound {

void canonicalize_cycle(std::vector<VertexId>& cycle) {
  auto mi = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mi, cycle.end());
  if (cycle.size() >= 3 && cycle[1] > cycle.back()) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
}

CycleWitness CycleWitness::from_vertices(const WeightedGraph& g, std::vector<VertexId> cycle) {
  if (cycle.size() < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::set<VertexId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw ValidationError("cycle repeats a vertex");
  canonicalize_cycle(cycle);
  CycleWitness w;
  w.vertices = std::move(cycle);
  w.weight = w.recompute_weight(g);
  return w;
}

std::vector<int> CycleWitness::edge_indices(const WeightedGraph& g) const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    VertexId a = vertices[i];
    VertexId b = vertices[(i + 1) % vertices.size()];
    int e = g.edge_between(a, b);
    if (e == -1) {
      throw ValidationError("cycle uses non-edge " + std::to_string(a) + "-" +
                            std::to_string(b));
    }
    out.push_back(e);
  }
  return out;
}

bool CycleWitness::contains_edge(const WeightedGraph& g, int edge) const {
  for (int e : edge_indices(g)) {
    if (e == edge) return true;
  }
  return false;
}

Rational CycleWitness::recompute_weight(const WeightedGraph& g) const {
  Rational sum;
  for (int e : edge_indices(g)) sum += g.edge(e).weight;
  return sum;
}

namespace {

// DFS cycle enumeration: from each start vertex s, walk only through vertices
// > s and close back to s with path[1] < path.back(). Every simple cycle is
// produced exactly once, already in canonical form.
struct CycleEnumerator {
  const WeightedGraph& g;
  const std::function<void(const CycleWitness&)>& fn;
  VertexId start = 0;
  std::vector<VertexId> path;
  std::vector<char> on_path;
  Rational running;

  CycleEnumerator(const WeightedGraph& g, const std::function<void(const CycleWitness&)>& fn)
      : g(g), fn(fn), on_path(g.vertex_count(), 0) {}

  void run() {
    for (start = 0; start < g.vertex_count(); ++start) {
      path.assign(1, start);
      on_path.assign(g.vertex_count(), 0);
      on_path[start] = 1;
      dfs(start);
    }
  }

  void dfs(VertexId x) {
    for (const AdjEntry& a : g.neighbors(x)) {
      if (a.to == start && path.size() >= 3 && path[1] < x) {
        CycleWitness w;
        w.vertices = path;
        w.weight = running;
        w.weight += g.edge(a.edge).weight;
        fn(w);
        continue;
      }
      if (a.to <= start || on_path[a.to]) continue;
      on_path[a.to] = 1;
      path.push_back(a.to);
      running += g.edge(a.edge).weight;
      dfs(a.to);
      running -= g.edge(a.edge).weight;
      path.pop_back();
      on_path[a.to] = 0;
    }
  }
};

}  // namespace

void for_each_cycle(const WeightedGraph& g, int vertex_cap,
                    const std::function<void(const CycleWitness&)>& fn) {
  if (g.vertex_count() > vertex_cap) {
    throw CapExceededError("cycle enumeration refused: n = " +
                           std::to_string(g.vertex_count()) + " exceeds the enumeration cap " +
                           std::to_string(vertex_cap));
  }
  CycleEnumerator(g, fn).run();
}

std::vector<CycleWitness> enumerate_cycles(const WeightedGraph& g, int vertex_cap) {
  std::vector<CycleWitness> out;
  for_each_cycle(g, vertex_cap, [&](const CycleWitness& w) { out.push_back(w); });
  return out;
}

namespace {

// Exact branch-and-bound for the heaviest simple cycle through one edge.
// Explores u-v paths in G - e; a partial path is cut only when an admissible
// bound (closing weight + current + the heaviest still-usable edges that a
// completion could possibly take) falls strictly below the incumbent, so all
// ties survive and the canonically smallest optimum is returned.
class HeaviestThroughSearch {
 public:
  HeaviestThroughSearch(const WeightedGraph& g, int through_edge)
      : g_(g),
        through_(through_edge),
        visited_(g.vertex_count(), 0),
        usable_(g.edge_count(), 1) {
    usable_[through_] = 0;
    order_.reserve(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g_.edge(b).weight < g_.edge(a).weight;
    });
  }

  std::optional<std::pair<std::vector<VertexId>, Rational>> run() {
    const Edge& e = g_.edge(through_);
    target_ = e.v;
    close_weight_ = e.weight;
    path_.assign(1, e.u);
    visited_[e.u] = 1;
    extend(e.u);
    return best_;
  }

 private:
  void extend(VertexId x) {
    for (const AdjEntry& a : g_.neighbors(x)) {
      if (a.edge == through_) continue;
      if (a.to == target_) {
        if (path_.size() >= 2) {
          Rational total = running_;
          total += g_.edge(a.edge).weight;
          total += close_weight_;
          consider(total);
        }
        continue;
      }
      if (visited_[a.to]) continue;

      running_ += g_.edge(a.edge).weight;
      // x becomes interior: edges at x can no longer serve a completion.
      std::vector<int> retired;
      for (const AdjEntry& b : g_.neighbors(x)) {
        if (usable_[b.edge]) {
          usable_[b.edge] = 0;
          retired.push_back(b.edge);
        }
      }
      ++interior_;
      visited_[a.to] = 1;
      path_.push_back(a.to);

      if (!best_ || !prunable()) extend(a.to);

      path_.pop_back();
      visited_[a.to] = 0;
      --interior_;
      for (int idx : retired) usable_[idx] = 1;
      running_ -= g_.edge(a.edge).weight;
    }
  }

  // A completion from here visits only non-interior vertices, hence uses at
  // most (#non-interior - 1) usable edges; bounding by the heaviest such
  // edges is admissible because all weights are positive.
  bool prunable() const {
    Rational bound = running_;
    bound += close_weight_;
    int budget = g_.vertex_count() - interior_ - 1;
    for (int idx : order_) {
      if (budget <= 0) break;
      if (!usable_[idx]) continue;
      bound += g_.edge(idx).weight;
      --budget;
      if (!(bound < best_->second)) return false;
    }
    return bound < best_->second;
  }

  void consider(const Rational& total) {
    if (best_ && total < best_->second) return;
    std::vector<VertexId> cyc = path_;
    cyc.push_back(target_);
    canonicalize_cycle(cyc);
    if (!best_ || total > best_->second || cyc < best_->first) {
      best_.emplace(std::move(cyc), total);
    }
  }

  const WeightedGraph& g_;
  int through_;
  VertexId target_ = 0;
  Rational close_weight_;
  std::vector<char> visited_;
  std::vector<char> usable_;
  std::vector<int> order_;  // edge indices by descending weight
  std::vector<VertexId> path_;
  Rational running_;
  int interior_ = 0;
  std::optional<std::pair<std::vector<VertexId>, Rational>> best_;
};

LocalProfile bridge_profile(const WeightedGraph& g, int edge) {
  LocalProfile p;
  p.edge = edge;
  p.is_bridge = true;
  p.c_w = g.edge(edge).weight + g.edge(edge).weight;
  p.phi = Rational(1, 2);
  return p;
}

// One block's share of the search: the induced subgraph and, per contained
// edge, its index within that subgraph.
struct BlockTask {
  int global_edge;
  int sub_edge;
  const InducedSubgraph* sub;
};

LocalProfile search_profile(const WeightedGraph& g, const BlockTask& task) {
  HeaviestThroughSearch search(task.sub->graph, task.sub_edge);
  auto found = search.run();
  if (!found) {
    // A non-bridge edge always lies on a cycle inside its block.
    throw ValidationError("internal: no cycle through non-bridge edge " +
                          std::to_string(task.global_edge));
  }
  CycleWitness w;
  w.vertices.reserve(found->first.size());
  for (VertexId v : found->first) w.vertices.push_back(task.sub->to_original[v]);
  w.weight = found->second;
  LocalProfile p;
  p.edge = task.global_edge;
  p.is_bridge = false;
  p.c_w = found->second;
  p.witness = std::move(w);
  p.phi = g.edge(task.global_edge).weight / p.c_w;
  return p;
}

}  // namespace

std::vector<LocalProfile> local_profiles(const WeightedGraph& g, const SearchLimits& limits,
                                         int jobs) {
  const BridgeSet bridges = find_bridges(g);
  std::vector<LocalProfile> out(g.edge_count());
  for (int e : bridges.bridges) out[e] = bridge_profile(g, e);

  const BlockDecomposition dec = block_decomposition(g);
  std::vector<std::unique_ptr<InducedSubgraph>> subs;
  std::vector<BlockTask> tasks;
  std::vector<int> sub_of_block(dec.blocks.size(), -1);
  for (size_t b = 0; b < dec.blocks.size(); ++b) {
    const Block& block = dec.blocks[b];
    if (block.is_bridge_block()) continue;
    if (static_cast<int>(block.vertices.size()) > limits.search_cap) {
      throw CapExceededError(
          "heaviest-cycle search refused: a block has " +
          std::to_string(block.vertices.size()) + " vertices, exceeding the search cap " +
          std::to_string(limits.search_cap));
    }
    sub_of_block[b] = static_cast<int>(subs.size());
    subs.push_back(std::make_unique<InducedSubgraph>(induced_subgraph(g, block.vertices)));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (bridges.is_bridge[e]) continue;
    const InducedSubgraph* sub = subs[sub_of_block[dec.block_of_edge[e]]].get();
    int sub_edge = -1;
    for (size_t i = 0; i < sub->edge_to_original.size(); ++i) {
      if (sub->edge_to_original[i] == e) {
        sub_edge = static_cast<int>(i);
        break;
      }
    }
    tasks.push_back({e, sub_edge, sub});
  }

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (workers <= 1) {
    for (const BlockTask& t : tasks) out[t.global_edge] = search_profile(g, t);
    return out;
  }

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        out[tasks[i].global_edge] = search_profile(g, tasks[i]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::pair<Rational, std::optional<CycleWitness>> heaviest_cycle_through(
    const WeightedGraph& g, int edge, const SearchLimits& limits) {
  if (edge < 0 || edge >= g.edge_count()) {
    throw ValidationError("edge index " + std::to_string(edge) + " out of range (m = " +
                          std::to_string(g.edge_count()) + ")");
  }
  const BridgeSet bridges = find_bridges(g);
  if (bridges.is_bridge[edge]) {
    LocalProfile p = bridge_profile(g, edge);
    return {p.c_w, std::nullopt};
  }
  const BlockDecomposition dec = block_decomposition(g);
  const Block& block = dec.blocks[dec.block_of_edge[edge]];
  if (static_cast<int>(block.vertices.size()) > limits.search_cap) {
    throw CapExceededError("heaviest-cycle search refused: the edge's block has " +
                           std::to_string(block.vertices.size()) +
                           " vertices, exceeding the search cap " +
                           std::to_string(limits.search_cap));
  }
  InducedSubgraph sub = induced_subgraph(g, block.vertices);
  int sub_edge = -1;
  for (size_t i = 0; i < sub.edge_to_original.size(); ++i) {
    if (sub.edge_to_original[i] == edge) {
      sub_edge = static_cast<int>(i);
      break;
    }
  }
  LocalProfile p = search_profile(g, {edge, sub_edge, &sub});
  return {p.c_w, std::move(p.witness)};
}

std::pair<Rational, std::optional<CycleWitness>> heaviest_cycle(const WeightedGraph& g,
                                                                const SearchLimits& limits) {
  std::vector<LocalProfile> profiles = local_profiles(g, limits);
  std::optional<CycleWitness> best;
  for (const LocalProfile& p : profiles) {
    if (p.is_bridge) continue;
    if (!best || p.c_w > best->weight ||
        (p.c_w == best->weight && p.witness->vertices < best->vertices)) {
      best = p.witness;
    }
  }
  if (!best) return {Rational(0), std::nullopt};
  return {best->weight, std::move(best)};
}

int longest_cycle_through(const WeightedGraph& g, int edge, const SearchLimits& limits) {
  auto [c, witness] = heaviest_cycle_through(uniform_weights(g), edge, limits);
  return witness ? witness->length() : 2;
}

namespace {

WeightedGraph uniform_complete(int r) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) edges.push_back({u, v, Rational(1)});
  }
  return WeightedGraph(r, std::move(edges));
}

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

HamiltonCatalog hamilton_catalog(int r) {
  if (r < 3 || r > 8) {
    throw ValidationError("hamilton_catalog supports 3 <= r <= 8, got " + std::to_string(r));
  }
  const WeightedGraph kr = uniform_complete(r);
  HamiltonCatalog cat;
  cat.r = r;
  cat.incidence.assign(kr.edge_count(), 0);

  std::vector<VertexId> perm;
  for (VertexId v = 1; v < r; ++v) perm.push_back(v);
  do {
    // Fixing vertex 0 first and ruling out reversals leaves one canonical
    // representative per undirected Hamilton cycle.
    if (perm.front() > perm.back()) continue;
    CycleWitness w;
    w.vertices.reserve(r);
    w.vertices.push_back(0);
    w.vertices.insert(w.vertices.end(), perm.begin(), perm.end());
    for (int e : w.edge_indices(kr)) {
      ++cat.incidence[e];
      w.weight += kr.edge(e).weight;
    }
    cat.cycles.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const long expected_cycles = factorial(r - 1) / 2;
  const long expected_incidence = factorial(r - 2);
  if (static_cast<long>(cat.cycles.size()) != expected_cycles) {
    throw CounterexampleError("Hamilton cycle count of K_" + std::to_string(r) + " is " +
                                  std::to_string(cat.cycles.size()) + ", expected " +
                                  std::to_string(expected_cycles),
                              serialize_graph(kr));
  }
  for (long c : cat.incidence) {
    if (c != expected_incidence) {
      throw CounterexampleError("Hamilton incidence in K_" + std::to_string(r) + " is " +
                                    std::to_string(c) + ", expected " +
                                    std::to_string(expected_incidence),
                                serialize_graph(kr));
    }
  }
  return cat;
}

TwoOptConnectivity two_opt_graph_connected(int r) {
  if (r < 4 || r > 7) {
    throw ValidationError("two_opt_graph_connected supports 4 <= r <= 7, got " +
                          std::to_string(r));
  }
  const WeightedGraph kr = uniform_complete(r);
  const HamiltonCatalog cat = hamilton_catalog(r);
  std::vector<std::uint32_t> masks;
  masks.reserve(cat.cycles.size());
  for (const CycleWitness& w : cat.cycles) {
    std::uint32_t m = 0;
    for (int e : w.edge_indices(kr)) m |= std::uint32_t{1} << e;
    masks.push_back(m);
  }

  std::vector<int> parent(masks.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      if (masks[i] & masks[j]) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < masks.size(); ++i) roots.insert(find(static_cast<int>(i)));
  TwoOptConnectivity result;
  result.component_count = static_cast<int>(roots.size());
  result.connected = result.component_count == 1;
  return result;
}

}  // namespace cyclebound
