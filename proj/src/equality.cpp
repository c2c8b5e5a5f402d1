#include "cyclebound/equality.hpp"

#include <algorithm>
#include <string>

#include "cyclebound/decomposition.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/generators.hpp"

namespace cyclebound {

namespace {

std::string pair_name(VertexId u, VertexId v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

const Rational& lookup(const CliqueWeights& weights, VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  auto it = weights.find({u, v});
  if (it == weights.end()) {
    throw ValidationError("missing edge weight for " + pair_name(u, v));
  }
  return it->second;
}

void check_clique_weights(const CliqueWeights& weights, int r) {
  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) {
      const Rational& w = lookup(weights, u, v);
      if (!w.is_positive()) {
        throw ValidationError("edge weight for " + pair_name(u, v) + " must be positive");
      }
    }
  }
}

WeightedGraph clique_from_weights(const CliqueWeights& weights, int r) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(r) * (r - 1) / 2);
  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) edges.push_back({u, v, lookup(weights, u, v)});
  }
  return WeightedGraph(r, std::move(edges));
}

}  // namespace

std::optional<InducedSolution> solve_vertex_induced(const CliqueWeights& weights, int r) {
  if (r < 3) throw ValidationError("vertex-induced recovery needs r >= 3, got " + std::to_string(r));
  check_clique_weights(weights, r);

  InducedSolution sol;
  sol.a.assign(r, Rational());
  if (r == 3) {
    // Exactly determined: a(u) = w(uv) + w(uw) - w(vw).
    sol.a[0] = lookup(weights, 0, 1) + lookup(weights, 0, 2) - lookup(weights, 1, 2);
    sol.a[1] = (lookup(weights, 0, 1) + lookup(weights, 0, 1)) - sol.a[0];
    sol.a[2] = (lookup(weights, 0, 2) + lookup(weights, 0, 2)) - sol.a[0];
  } else {
    // Basis x = 0, y = 1: a(t) = w(tx) + w(ty) - w(xy) for the rest, then the
    // 2x2 system for a(x), a(y); the overdetermined remainder is verified below.
    for (VertexId t = 2; t < r; ++t) {
      sol.a[t] = lookup(weights, 0, t) + lookup(weights, 1, t) - lookup(weights, 0, 1);
    }
    sol.a[0] = (lookup(weights, 0, 2) + lookup(weights, 0, 2)) - sol.a[2];
    sol.a[1] = (lookup(weights, 0, 1) + lookup(weights, 0, 1)) - sol.a[0];
  }

  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) {
      const Rational& w = lookup(weights, u, v);
      if (sol.a[u] + sol.a[v] != w + w) return std::nullopt;
    }
  }
  sol.all_nonnegative =
      std::none_of(sol.a.begin(), sol.a.end(), [](const Rational& x) { return x.is_negative(); });
  return sol;
}

InequalityReport verify_induced_clique_equality(int r, const std::vector<Rational>& a,
                                                const SearchLimits& limits) {
  if (r < 4) throw ValidationError("induced-clique equality needs r >= 4, got " + std::to_string(r));
  WeightedGraph g = gen_induced_clique(r, a);
  Rational total_a;
  for (const Rational& x : a) total_a += x;

  std::vector<LocalProfile> profiles = local_profiles(g, limits);
  for (const LocalProfile& p : profiles) {
    if (p.c_w != total_a) {
      throw CounterexampleError("induced clique: C_w on edge " +
                                    pair_name(g.edge(p.edge).u, g.edge(p.edge).v) + " is " +
                                    p.c_w.str() + ", expected the vertex-value sum " +
                                    total_a.str(),
                                serialize_graph(g));
    }
  }
  if (g.total_weight() * Rational(2) != Rational(r - 1) * total_a) {
    throw CounterexampleError("induced clique: total weight is " + g.total_weight().str() +
                                  ", expected (r-1)/2 times " + total_a.str(),
                              serialize_graph(g));
  }

  InequalityReport report = verify_main(g, std::move(profiles));
  if (!report.is_equality || report.local_sum != Rational(r - 1, 2)) {
    throw CounterexampleError("induced clique misses equality: local sum " +
                                  report.local_sum.str() + " vs bound " + report.bound.str(),
                              serialize_graph(g));
  }
  return report;
}

namespace {

// Sets flags (i)-(iii) for one 2-edge-connected component; `enforce` escalates
// any failed condition to a counterexample (equality instances must pass all).
NecessaryConditionEntry examine_component(const WeightedGraph& g,
                                          const std::vector<LocalProfile>& profiles,
                                          const ComponentShare& share, bool enforce,
                                          const SearchLimits& limits) {
  NecessaryConditionEntry entry;
  entry.vertices = share.vertices;
  entry.phi_subtotal_tight = share.phi_subtotal == share.bound;

  InducedSubgraph sub = induced_subgraph(g, share.vertices);
  std::vector<Rational> phi_sub;
  phi_sub.reserve(sub.edge_to_original.size());
  for (int orig : sub.edge_to_original) phi_sub.push_back(profiles[orig].phi);
  auto [max_phi, witness] = heaviest_cycle(reweight(sub.graph, phi_sub), limits);
  if (witness && max_phi == Rational(1)) {
    CycleWitness mapped;
    mapped.vertices.reserve(witness->vertices.size());
    for (VertexId v : witness->vertices) mapped.vertices.push_back(sub.to_original[v]);
    mapped.weight = mapped.recompute_weight(g);  // its w-weight; phi-weight is 1
    entry.tight_cycle = std::move(mapped);
  }

  if (entry.tight_cycle) {
    entry.termwise_tight = true;
    const Rational w_c = entry.tight_cycle->recompute_weight(g);
    for (int e : entry.tight_cycle->edge_indices(g)) {
      if (profiles[e].c_w != w_c) {
        entry.termwise_tight = false;
        break;
      }
    }
  }

  if (enforce) {
    const char* failed = nullptr;
    if (!entry.phi_subtotal_tight) failed = "phi-subtotal is not (n_H - 1)/2";
    else if (!entry.tight_cycle) failed = "no cycle of phi-weight 1";
    else if (!entry.termwise_tight) failed = "C_w differs from w(C) on the tight cycle";
    if (failed) {
      throw CounterexampleError(
          std::string("equality instance fails a necessary condition: ") + failed,
          serialize_graph(g));
    }
  }
  return entry;
}

CliqueWeights block_local_weights(const WeightedGraph& g, const std::vector<VertexId>& vertices) {
  CliqueWeights local;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      int e = g.edge_between(vertices[i], vertices[j]);
      if (e == -1) continue;  // caller checks clique-ness separately
      local[{static_cast<VertexId>(i), static_cast<VertexId>(j)}] = g.edge(e).weight;
    }
  }
  return local;
}

}  // namespace

EqualityCertificate certify_equality(const WeightedGraph& g, const SearchLimits& limits,
                                     int jobs) {
  EqualityCertificate cert;
  InequalityReport report = verify_main(g, limits, jobs);
  cert.status = report.is_equality ? EqualityStatus::Equality : EqualityStatus::Strict;

  for (const ComponentShare& share : report.per_component) {
    if (share.vertices.size() < 2) continue;  // no edges, nothing to examine
    cert.necessary_conditions.push_back(
        examine_component(g, report.profiles, share, report.is_equality, limits));
  }

  if (report.is_equality) {
    const BlockGraphCheck check = is_block_graph(g);
    if (check.is_block_graph) {
      cert.route = EqualityRoute::BlockGraphInduced;
      const BlockDecomposition dec = block_decomposition(g);
      for (const Block& block : dec.blocks) {
        BlockCertificate bc;
        bc.vertices = block.vertices;
        if (block.vertices.size() <= 3) {
          bc.unconstrained = true;  // bridges and triangles carry no constraint
        } else {
          auto sol = solve_vertex_induced(block_local_weights(g, block.vertices),
                                          static_cast<int>(block.vertices.size()));
          if (!sol || !sol->all_nonnegative) {
            throw CounterexampleError(
                "equality block graph has a block of size " +
                    std::to_string(block.vertices.size()) +
                    " whose weights are not vertex-induced with nonnegative values",
                serialize_graph(g));
          }
          bc.solution = std::move(sol);
        }
        cert.per_block.push_back(std::move(bc));
      }
    } else {
      cert.route = EqualityRoute::Other;
    }
  }

  cert.report = std::move(report);
  return cert;
}

bool verify_k_r_characterization(const WeightedGraph& g, const SearchLimits& limits) {
  const int r = g.vertex_count();
  if (!g.is_complete()) throw ValidationError("the characterization needs a complete graph");
  if (r < 4 || r > 7) {
    throw ValidationError("the characterization check supports 4 <= r <= 7, got " +
                          std::to_string(r));
  }

  CliqueWeights weights;
  for (int e = 0; e < g.edge_count(); ++e) {
    weights[{g.edge(e).u, g.edge(e).v}] = g.edge(e).weight;
  }
  auto sol = solve_vertex_induced(weights, r);
  const bool induced = sol.has_value() && sol->all_nonnegative;

  InequalityReport report = verify_main(g, limits);
  if (report.is_equality != induced) {
    throw CounterexampleError(
        std::string("complete-graph characterization broken: equality is ") +
            (report.is_equality ? "attained" : "missed") + " but the weighting is " +
            (induced ? "" : "not ") + "vertex-induced",
        serialize_graph(g));
  }

  if (report.is_equality) {
    const Rational& w_const = report.profiles.front().c_w;
    for (const LocalProfile& p : report.profiles) {
      if (p.c_w != w_const) {
        throw CounterexampleError("equality on a complete graph but C_w is not constant",
                                  serialize_graph(g));
      }
    }
    CliqueWeights phi;
    for (const LocalProfile& p : report.profiles) {
      phi[{g.edge(p.edge).u, g.edge(p.edge).v}] = p.phi;
    }
    auto phi_sol = solve_vertex_induced(phi, r);
    if (!phi_sol || !phi_sol->all_nonnegative) {
      throw CounterexampleError("equality on a complete graph but phi is not vertex-induced",
                                serialize_graph(g));
    }
  }
  return true;
}

bool verify_hamilton_equal_weight_implies_induced(int r, const CliqueWeights& weighting) {
  if (r < 4 || r > 7) {
    throw ValidationError("the equal-weight lemma check supports 4 <= r <= 7, got " +
                          std::to_string(r));
  }
  const WeightedGraph kr = clique_from_weights(weighting, r);
  const HamiltonCatalog catalog = hamilton_catalog(r);

  bool premise = true;
  Rational first;
  for (size_t i = 0; i < catalog.cycles.size() && premise; ++i) {
    Rational w = catalog.cycles[i].recompute_weight(kr);
    if (i == 0) {
      first = std::move(w);
    } else if (w != first) {
      premise = false;
    }
  }
  if (!premise) return true;  // the lemma's hypothesis does not apply

  if (!solve_vertex_induced(weighting, r)) {
    throw CounterexampleError(
        "all Hamilton cycles have equal weight but the weighting is not induced",
        serialize_graph(kr));
  }

  // The 2-opt exchange identity on every vertex quadruple: replacing edges
  // pq, st of a Hamilton cycle by ps, qt (or pt, qs) preserves total weight,
  // so all three pairings of {p,q,s,t} must carry the same sum.
  for (VertexId p = 0; p < r; ++p) {
    for (VertexId q = p + 1; q < r; ++q) {
      for (VertexId s = q + 1; s < r; ++s) {
        for (VertexId t = s + 1; t < r; ++t) {
          const Rational sum_a = lookup(weighting, p, q) + lookup(weighting, s, t);
          const Rational sum_b = lookup(weighting, p, s) + lookup(weighting, q, t);
          const Rational sum_c = lookup(weighting, p, t) + lookup(weighting, q, s);
          if (sum_a != sum_b || sum_a != sum_c) {
            throw CounterexampleError("2-opt exchange identity fails on vertices " +
                                          std::to_string(p) + "," + std::to_string(q) + "," +
                                          std::to_string(s) + "," + std::to_string(t),
                                      serialize_graph(kr));
          }
        }
      }
    }
  }
  return true;
}

}  // namespace cyclebound
