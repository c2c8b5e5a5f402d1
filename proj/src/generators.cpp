#include "cyclebound/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "cyclebound/errors.hpp"

namespace cyclebound {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw ValidationError("empty range for uniform draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<long>(engine_());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Rng::positive_rational(long num_max, long den_max) {
  return Rational(uniform(1, num_max), uniform(1, den_max));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// Prüfer decode: uniform over labeled trees. Returns unweighted edge pairs.
std::vector<std::pair<VertexId, VertexId>> random_tree_edges(int n, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return edges;
  std::vector<int> code(n - 2);
  for (int& x : code) x = static_cast<int>(rng.uniform(0, n - 1));

  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int x : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(static_cast<VertexId>(leaf), static_cast<VertexId>(x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  return edges;
}

void normalize_pairs(std::vector<std::pair<VertexId, VertexId>>& pairs) {
  for (auto& [u, v] : pairs) {
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
}

// Weights are drawn in sorted-pair order so a seed fixes the graph
// independently of how the edge set was assembled.
WeightedGraph weighted_from_pairs(int n, std::vector<std::pair<VertexId, VertexId>> pairs,
                                  Rng& rng, long num_max, long den_max) {
  normalize_pairs(pairs);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    edges.push_back({u, v, rng.positive_rational(num_max, den_max)});
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace

WeightedGraph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("a tree needs n >= 1, got " + std::to_string(n));
  Rng rng(seed);
  return weighted_from_pairs(n, random_tree_edges(n, rng), rng, 100, 10);
}

WeightedGraph gen_induced_clique(int r, const std::vector<Rational>& a) {
  if (r < 3) throw ValidationError("an induced clique needs r >= 3, got " + std::to_string(r));
  if (static_cast<int>(a.size()) != r) {
    throw ValidationError("expected " + std::to_string(r) + " vertex values, got " +
                          std::to_string(a.size()));
  }
  for (const Rational& x : a) {
    if (x.is_negative()) throw ValidationError("vertex values must be nonnegative");
  }
  const Rational half(1, 2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(r) * (r - 1) / 2);
  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) {
      Rational w = (a[u] + a[v]) * half;
      if (!w.is_positive()) {
        throw ValidationError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                              " both carry value 0, giving a zero-weight edge");
      }
      edges.push_back({u, v, std::move(w)});
    }
  }
  return WeightedGraph(r, std::move(edges));
}

namespace {

long block_edge_count(int size) { return static_cast<long>(size) * (size - 1) / 2; }

void check_block_spec(const BlockSpec& block, int index, int built_vertices) {
  const std::string where = "block " + std::to_string(index);
  if (block.size < 2) throw ValidationError(where + ": size must be at least 2");
  if (index == 0) {
    if (block.attach_at != -1) {
      throw ValidationError(where + ": the first block must not attach anywhere");
    }
  } else if (block.attach_at < 0 || block.attach_at >= built_vertices) {
    throw ValidationError(where + ": attachment vertex " + std::to_string(block.attach_at) +
                          " does not exist yet");
  }

  if (const auto* u = std::get_if<UniformWeights>(&block.weights)) {
    if (!u->value.is_positive()) throw ValidationError(where + ": uniform weight must be positive");
  } else if (const auto* ind = std::get_if<InducedWeights>(&block.weights)) {
    if (block.size < 3) {
      throw ValidationError(where + ": induced weights need a block of size >= 3");
    }
    if (static_cast<int>(ind->a.size()) != block.size) {
      throw ValidationError(where + ": expected " + std::to_string(block.size) +
                            " vertex values");
    }
    int zeros = 0;
    for (const Rational& x : ind->a) {
      if (x.is_negative()) throw ValidationError(where + ": vertex values must be nonnegative");
      if (x.is_zero()) ++zeros;
    }
    if (zeros > 1) {
      throw ValidationError(where + ": two zero vertex values give a zero-weight edge");
    }
  } else {
    const auto& ex = std::get<ExplicitWeights>(block.weights);
    if (block.size > 3) {
      throw ValidationError(where + ": explicit weights are only for bridges and triangles");
    }
    if (static_cast<long>(ex.w.size()) != block_edge_count(block.size)) {
      throw ValidationError(where + ": expected " + std::to_string(block_edge_count(block.size)) +
                            " edge weights");
    }
    for (const Rational& x : ex.w) {
      if (!x.is_positive()) throw ValidationError(where + ": edge weights must be positive");
    }
  }
}

}  // namespace

WeightedGraph gen_block_graph(const BlockGraphSpec& spec) {
  if (spec.blocks.empty()) throw ValidationError("a block graph needs at least one block");
  const Rational half(1, 2);
  std::vector<Edge> edges;
  int n = 0;
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    const BlockSpec& block = spec.blocks[b];
    check_block_spec(block, static_cast<int>(b), n);

    std::vector<VertexId> verts;
    verts.reserve(block.size);
    if (b == 0) {
      for (int i = 0; i < block.size; ++i) verts.push_back(n++);
    } else {
      verts.push_back(block.attach_at);
      for (int i = 1; i < block.size; ++i) verts.push_back(n++);
    }

    int slot = 0;
    for (int i = 0; i < block.size; ++i) {
      for (int j = i + 1; j < block.size; ++j, ++slot) {
        Rational w;
        if (const auto* u = std::get_if<UniformWeights>(&block.weights)) {
          w = u->value;
        } else if (const auto* ind = std::get_if<InducedWeights>(&block.weights)) {
          w = (ind->a[i] + ind->a[j]) * half;
          if (!w.is_positive()) {
            throw ValidationError("block " + std::to_string(b) +
                                  ": zero-weight edge from two zero vertex values");
          }
        } else {
          w = std::get<ExplicitWeights>(block.weights).w[slot];
        }
        edges.push_back({verts[i], verts[j], std::move(w)});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

BlockGraphSpec random_block_graph_spec(int max_blocks, int max_block_size, std::uint64_t seed) {
  if (max_blocks < 1) throw ValidationError("max_blocks must be at least 1");
  if (max_block_size < 2) throw ValidationError("max_block_size must be at least 2");
  Rng rng(seed);
  BlockGraphSpec spec;
  const int blocks = static_cast<int>(rng.uniform(1, max_blocks));
  int n = 0;
  for (int b = 0; b < blocks; ++b) {
    BlockSpec block;
    block.size = static_cast<int>(rng.uniform(2, max_block_size));
    block.attach_at = b == 0 ? -1 : static_cast<VertexId>(rng.uniform(0, n - 1));

    // Blocks of size >= 4 stay uniform or induced so the whole family attains
    // equality; bridges and triangles are unconstrained.
    const bool allow_explicit = block.size <= 3;
    const long kind = rng.uniform(0, allow_explicit ? 2 : 1);
    if (kind == 0) {
      block.weights = UniformWeights{rng.positive_rational(20, 6)};
    } else if (kind == 1 && block.size >= 3) {
      InducedWeights ind;
      const bool with_zero = rng.uniform(0, 3) == 0;
      const long zero_pos = with_zero ? rng.uniform(0, block.size - 1) : -1;
      for (int i = 0; i < block.size; ++i) {
        if (i == zero_pos) {
          ind.a.emplace_back(0);
        } else {
          ind.a.push_back(rng.positive_rational(20, 6));
        }
      }
      block.weights = std::move(ind);
    } else if (block.size <= 3) {
      ExplicitWeights ex;
      for (long i = 0; i < block_edge_count(block.size); ++i) {
        ex.w.push_back(rng.positive_rational(20, 6));
      }
      block.weights = std::move(ex);
    } else {
      block.weights = UniformWeights{rng.positive_rational(20, 6)};
    }

    n += b == 0 ? block.size : block.size - 1;
    spec.blocks.push_back(std::move(block));
  }
  return spec;
}

WeightedGraph gen_random_connected(const RandomSpec& spec) {
  if (spec.n < 1) throw ValidationError("n must be at least 1");
  const long max_m = static_cast<long>(spec.n) * (spec.n - 1) / 2;
  const long min_m = spec.n - 1;
  if (spec.m && spec.edge_probability) {
    throw ValidationError("give either an edge count or an edge probability, not both");
  }

  Rng rng(spec.seed);
  long m;
  if (spec.m) {
    m = *spec.m;
  } else if (spec.edge_probability) {
    const double p = *spec.edge_probability;
    if (p < 0.0 || p > 1.0) throw ValidationError("edge probability must lie in [0, 1]");
    m = min_m + static_cast<long>(p * static_cast<double>(max_m - min_m) + 0.5);
  } else {
    m = rng.uniform(min_m, max_m);
  }
  if (m < min_m || m > max_m) {
    throw ValidationError("infeasible edge count " + std::to_string(m) + " for n = " +
                          std::to_string(spec.n) + " (connected needs " + std::to_string(min_m) +
                          ".." + std::to_string(max_m) + ")");
  }

  std::vector<std::pair<VertexId, VertexId>> pairs = random_tree_edges(spec.n, rng);
  const long extra = m - static_cast<long>(pairs.size());
  if (extra > 0) {
    std::set<std::pair<VertexId, VertexId>> taken;
    for (auto [u, v] : pairs) taken.insert({std::min(u, v), std::max(u, v)});
    std::vector<std::pair<VertexId, VertexId>> candidates;
    for (VertexId u = 0; u < spec.n; ++u) {
      for (VertexId v = u + 1; v < spec.n; ++v) {
        if (!taken.count({u, v})) candidates.emplace_back(u, v);
      }
    }
    // Partial Fisher–Yates: the first `extra` slots end up uniform.
    for (long i = 0; i < extra; ++i) {
      const long j = rng.uniform(i, static_cast<long>(candidates.size()) - 1);
      std::swap(candidates[i], candidates[j]);
      pairs.push_back(candidates[i]);
    }
  }
  return weighted_from_pairs(spec.n, std::move(pairs), rng, spec.num_max, spec.den_max);
}

WeightedGraph perturb_edge(const WeightedGraph& g, int edge, const Rational& delta) {
  if (edge < 0 || edge >= g.edge_count()) {
    throw ValidationError("edge index " + std::to_string(edge) + " out of range (m = " +
                          std::to_string(g.edge_count()) + ")");
  }
  std::vector<Edge> edges = g.edges();
  edges[edge].weight += delta;
  if (!edges[edge].weight.is_positive()) {
    throw ValidationError("perturbation drives the weight of edge " +
                          std::to_string(edges[edge].u) + "-" + std::to_string(edges[edge].v) +
                          " to " + edges[edge].weight.str() + "; weights must stay positive");
  }
  return WeightedGraph(g.vertex_count(), std::move(edges));
}

}  // namespace cyclebound
