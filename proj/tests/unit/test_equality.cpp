#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "cyclebound/equality.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/generators.hpp"

using namespace cyclebound;
using namespace testutil;

namespace {

CliqueWeights induced_weights(const std::vector<Rational>& a) {
  CliqueWeights w;
  const int r = static_cast<int>(a.size());
  for (VertexId u = 0; u < r; ++u) {
    for (VertexId v = u + 1; v < r; ++v) w[{u, v}] = (a[u] + a[v]) / Rational(2);
  }
  return w;
}

CliqueWeights weights_of(const WeightedGraph& g) {
  CliqueWeights w;
  for (const Edge& e : g.edges()) w[{e.u, e.v}] = e.weight;
  return w;
}

}  // namespace

TEST_CASE("solve_vertex_induced recovers vertex values") {
  auto uniform = solve_vertex_induced(weights_of(complete_graph(4)), 4);
  REQUIRE(uniform.has_value());
  CHECK(uniform->all_nonnegative);
  for (const Rational& v : uniform->a) CHECK(v == Rational(1));

  std::vector<Rational> a{Rational(1), Rational(2), Rational(3), Rational(4)};
  auto recovered = solve_vertex_induced(induced_weights(a), 4);
  REQUIRE(recovered.has_value());
  CHECK(recovered->a == a);
  CHECK(recovered->all_nonnegative);

  // a(t) = w(tx) + w(ty) - w(xy) for any triangle {t, x, y}: check one by hand.
  CliqueWeights w = induced_weights(a);
  CHECK(recovered->a[0] == w[{0, 1}] + w[{0, 2}] - w[{1, 2}]);
}

TEST_CASE("solve_vertex_induced rejects inconsistent weightings") {
  std::vector<Rational> a{Rational(1), Rational(2), Rational(3), Rational(4)};
  CliqueWeights w = induced_weights(a);
  w[{0, 1}] += Rational(1, 7);
  CHECK_FALSE(solve_vertex_induced(w, 4).has_value());
}

TEST_CASE("solve_vertex_induced on triangles always solves") {
  CliqueWeights w;
  w[{0, 1}] = Rational(1);
  w[{0, 2}] = Rational(2);
  w[{1, 2}] = Rational(3);
  auto s = solve_vertex_induced(w, 3);
  REQUIRE(s.has_value());
  CHECK(s->a == std::vector<Rational>{Rational(0), Rational(2), Rational(4)});
  CHECK(s->all_nonnegative);

  // ... but the values can go negative on a heavy opposite edge.
  CliqueWeights heavy;
  heavy[{0, 1}] = Rational(1, 10);
  heavy[{0, 2}] = Rational(1, 10);
  heavy[{1, 2}] = Rational(10);
  auto neg = solve_vertex_induced(heavy, 3);
  REQUIRE(neg.has_value());
  CHECK_FALSE(neg->all_nonnegative);
  CHECK(neg->a[0].is_negative());
}

TEST_CASE("solve_vertex_induced input validation") {
  CliqueWeights incomplete;
  incomplete[{0, 1}] = Rational(1);
  CHECK_THROWS_AS(solve_vertex_induced(incomplete, 3), ValidationError);
  CHECK_THROWS_AS(solve_vertex_induced(CliqueWeights{}, 2), ValidationError);
}

TEST_CASE("verify_induced_clique_equality certifies the family") {
  InequalityReport r4 = verify_induced_clique_equality(4, {Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(r4.is_equality);
  CHECK(r4.local_sum == Rational(3, 2));
  for (const LocalProfile& p : r4.profiles) CHECK(p.c_w == Rational(4));

  InequalityReport mixed = verify_induced_clique_equality(4, {Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(mixed.is_equality);
  for (const LocalProfile& p : mixed.profiles) CHECK(p.c_w == Rational(10));

  // One zero vertex value is fine; C_w collapses to A = 4 everywhere.
  InequalityReport r5 = verify_induced_clique_equality(
      5, {Rational(0), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(r5.is_equality);
  CHECK(r5.local_sum == Rational(2));
  for (const LocalProfile& p : r5.profiles) CHECK(p.c_w == Rational(4));

  CHECK_THROWS_AS(verify_induced_clique_equality(3, {Rational(1), Rational(1), Rational(1)}),
                  ValidationError);
  CHECK_THROWS_AS(
      verify_induced_clique_equality(4, {Rational(-1), Rational(2), Rational(2), Rational(2)}),
      ValidationError);
  CHECK_THROWS_AS(
      verify_induced_clique_equality(4, {Rational(0), Rational(0), Rational(1), Rational(1)}),
      ValidationError);
}

TEST_CASE("certify_equality on a block graph: equality with induced blocks") {
  EqualityCertificate cert = certify_equality(bowtie());
  CHECK(cert.status == EqualityStatus::Equality);
  REQUIRE(cert.route.has_value());
  CHECK(*cert.route == EqualityRoute::BlockGraphInduced);
  REQUIRE(cert.per_block.size() == 2);
  for (const BlockCertificate& b : cert.per_block) {
    CHECK(b.vertices.size() == 3);
    CHECK(b.unconstrained);  // triangles carry no induced constraint
  }
  for (const NecessaryConditionEntry& nc : cert.necessary_conditions) {
    CHECK(nc.phi_subtotal_tight);
    REQUIRE(nc.tight_cycle.has_value());
    CHECK(nc.termwise_tight);
  }
}

TEST_CASE("certify_equality solves the size-4 blocks") {
  BlockGraphSpec spec;
  spec.blocks.push_back({4, -1, InducedWeights{{Rational(1), Rational(2), Rational(3), Rational(4)}}});
  spec.blocks.push_back({2, 3, UniformWeights{Rational(5)}});
  spec.blocks.push_back({3, 4, ExplicitWeights{{Rational(1), Rational(2), Rational(3)}}});
  WeightedGraph g = gen_block_graph(spec);
  CHECK(g.vertex_count() == 7);

  EqualityCertificate cert = certify_equality(g);
  CHECK(cert.status == EqualityStatus::Equality);
  bool found_clique_block = false;
  for (const BlockCertificate& b : cert.per_block) {
    if (b.vertices.size() == 4) {
      found_clique_block = true;
      CHECK_FALSE(b.unconstrained);
      REQUIRE(b.solution.has_value());
      CHECK(b.solution->all_nonnegative);
    } else {
      CHECK(b.unconstrained);
    }
  }
  CHECK(found_clique_block);
}

TEST_CASE("certify_equality on a strict instance keeps the diagnostics") {
  EqualityCertificate cert = certify_equality(cycle_graph(4));
  CHECK(cert.status == EqualityStatus::Strict);
  CHECK_FALSE(cert.route.has_value());
  REQUIRE(cert.necessary_conditions.size() == 1);
  const NecessaryConditionEntry& nc = cert.necessary_conditions[0];
  // φ-subtotal is 1 against a bound of 3/2 — not tight — yet the cycle
  // condition and the termwise condition both hold on the unique cycle.
  CHECK_FALSE(nc.phi_subtotal_tight);
  REQUIRE(nc.tight_cycle.has_value());
  CHECK(nc.tight_cycle->length() == 4);
  CHECK(nc.termwise_tight);
}

TEST_CASE("complete-graph characterization, both directions") {
  CHECK(verify_k_r_characterization(gen_induced_clique(5, {Rational(1), Rational(1), Rational(2), Rational(3), Rational(5)})));
  CHECK(verify_k_r_characterization(complete_graph(4)));

  WeightedGraph perturbed = perturb_edge(gen_induced_clique(4, {Rational(1), Rational(2), Rational(3), Rational(4)}), 0, Rational(1, 3));
  CHECK(verify_k_r_characterization(perturbed));  // strict and non-induced: consistent
  CHECK_FALSE(verify_main(perturbed).is_equality);
  CHECK_FALSE(solve_vertex_induced(weights_of(perturbed), 4).has_value());

  CHECK_THROWS_AS(verify_k_r_characterization(bowtie()), ValidationError);
  CHECK_THROWS_AS(verify_k_r_characterization(complete_graph(3)), ValidationError);
  CHECK_THROWS_AS(verify_k_r_characterization(complete_graph(8)), ValidationError);
}

TEST_CASE("equal Hamilton weights force an induced weighting") {
  CHECK(verify_hamilton_equal_weight_implies_induced(4, induced_weights({Rational(1), Rational(2), Rational(3), Rational(4)})));
  CHECK(verify_hamilton_equal_weight_implies_induced(5, induced_weights({Rational(2), Rational(2), Rational(2), Rational(2), Rational(2)})));

  // Negative vertex values still give equal Hamilton weights; the lemma
  // allows them even though the equality characterization does not.
  std::vector<Rational> a{Rational(-1), Rational(2), Rational(2), Rational(2)};
  CliqueWeights w = induced_weights(a);
  CHECK(verify_hamilton_equal_weight_implies_induced(4, w));
  auto s = solve_vertex_induced(w, 4);
  REQUIRE(s.has_value());
  CHECK_FALSE(s->all_nonnegative);

  // Unequal Hamilton weights: vacuously fine.
  CliqueWeights bumped = induced_weights({Rational(1), Rational(1), Rational(1), Rational(1)});
  bumped[{0, 1}] += Rational(1, 2);
  CHECK(verify_hamilton_equal_weight_implies_induced(4, bumped));

  CHECK_THROWS_AS(verify_hamilton_equal_weight_implies_induced(3, CliqueWeights{}), ValidationError);
}
