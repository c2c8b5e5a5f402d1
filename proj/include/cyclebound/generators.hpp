#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

// Deterministic RNG. mt19937_64's output sequence is fixed by the standard,
// and the bounded draws below use rejection sampling instead of the
// unspecified standard distributions, so identical seeds give identical
// graphs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  long uniform(long lo, long hi);  // inclusive bounds
  Rational positive_rational(long num_max = 100, long den_max = 10);

 private:
  std::mt19937_64 engine_;
};

// Splitmix-style mixing, for carving independent per-instance seeds out of a
// master seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Uniform random labeled tree with random positive rational weights.
WeightedGraph gen_tree(int n, std::uint64_t seed);

// K_r with w(uv) = (a(u)+a(v))/2 for nonnegative vertex values; rejects a
// pair of zero values (that edge weight would be 0).
WeightedGraph gen_induced_clique(int r, const std::vector<Rational>& a);

struct UniformWeights {
  Rational value;
};
struct InducedWeights {
  std::vector<Rational> a;  // one value per block-local vertex
};
struct ExplicitWeights {
  std::vector<Rational> w;  // per block-local edge, pairs in sorted order
};

struct BlockSpec {
  int size = 0;
  VertexId attach_at = -1;  // existing vertex to share; -1 only for the first block
  std::variant<UniformWeights, InducedWeights, ExplicitWeights> weights;
};

struct BlockGraphSpec {
  std::vector<BlockSpec> blocks;
};

// Assembles the block graph block by block, each new block sharing exactly
// its attachment vertex with the graph built so far. Induced weights need
// size ≥ 3; explicit weights are only for bridges and triangles.
WeightedGraph gen_block_graph(const BlockGraphSpec& spec);

// Random valid spec whose blocks of size ≥ 4 are always uniform or induced —
// by construction an equality family.
BlockGraphSpec random_block_graph_spec(int max_blocks, int max_block_size, std::uint64_t seed);

struct RandomSpec {
  int n = 0;
  std::optional<long> m;                    // exact edge count
  std::optional<double> edge_probability;   // alternative to m
  long num_max = 100;  // weight numerators drawn from [1, num_max]
  long den_max = 10;   // denominators from [1, den_max]
  std::uint64_t seed = 0;
};

// Random connected graph: a uniform spanning tree plus uniformly chosen extra
// edges. Deterministic per (spec, seed).
WeightedGraph gen_random_connected(const RandomSpec& spec);

// Copy of g with w(e) += delta; the result must stay positive.
WeightedGraph perturb_edge(const WeightedGraph& g, int edge, const Rational& delta);

}  // namespace cyclebound
