#include "cyclebound/json_io.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "cyclebound/errors.hpp"

namespace cyclebound {

namespace {

constexpr double kTightTolerance = 1e-9;

Json rat(const Rational& v, ValueMode mode) {
  if (mode == ValueMode::Exact) return v.str();
  return v.to_double();
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(what + " must be an integer or a \"p/q\" string");
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + " is missing \"" + key + "\"");
  return *it;
}

}  // namespace

Json graph_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json::array({e.u, e.v, e.weight.str()}));
  }
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a graph document must be a JSON object");
  const Json& n = field(j, "n", "the graph object");
  if (!n.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const Json& edges = field(j, "edges", "the graph object");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");

  std::vector<Edge> parsed;
  parsed.reserve(edges.size());
  for (const Json& entry : edges) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw ParseError("every edge must be [u, v, weight]");
    }
    parsed.push_back({entry[0].get<VertexId>(), entry[1].get<VertexId>(),
                      rational_from_json(entry[2], "an edge weight")});
  }
  return WeightedGraph(n.get<int>(), std::move(parsed));
}

Json report_to_json(const WeightedGraph& g, const InequalityReport& r, ValueMode mode) {
  Json edges = Json::array();
  for (const LocalProfile& p : r.profiles) {
    const Edge& e = g.edge(p.edge);
    edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"w", rat(e.weight, mode)},
                         {"c_w", rat(p.c_w, mode)}, {"phi", rat(p.phi, mode)},
                         {"bridge", p.is_bridge}});
  }
  Json components = Json::array();
  for (const ComponentShare& share : r.per_component) {
    components.push_back(Json{{"vertices", share.vertices},
                              {"phi_subtotal", rat(share.phi_subtotal, mode)},
                              {"bound", rat(share.bound, mode)}});
  }
  Json out{{"n", r.n},
           {"local_sum", rat(r.local_sum, mode)},
           {"bound", rat(r.bound, mode)},
           {"gap", rat(r.gap, mode)}};
  if (mode == ValueMode::Exact) {
    out["equality"] = r.is_equality;
  } else {
    out["numerically_tight"] = std::abs(r.gap.to_double()) < kTightTolerance;
  }
  out["disconnected"] = !r.connected;
  out["edges"] = std::move(edges);
  out["components"] = std::move(components);
  return out;
}

Json certificate_to_json(const EqualityCertificate& c, ValueMode mode) {
  Json blocks = Json::array();
  for (const BlockCertificate& b : c.per_block) {
    Json entry{{"vertices", b.vertices}};
    if (b.solution) {
      Json a = Json::array();
      for (const Rational& x : b.solution->a) a.push_back(rat(x, mode));
      entry["a"] = std::move(a);
    } else {
      entry["a"] = nullptr;
    }
    entry["unconstrained"] = b.unconstrained;
    blocks.push_back(std::move(entry));
  }

  Json conditions = Json::array();
  for (const NecessaryConditionEntry& e : c.necessary_conditions) {
    Json entry{{"vertices", e.vertices},
               {"phi_subtotal_tight", e.phi_subtotal_tight}};
    entry["tight_cycle"] = e.tight_cycle ? Json(e.tight_cycle->vertices) : Json(nullptr);
    entry["termwise_tight"] = e.termwise_tight;
    conditions.push_back(std::move(entry));
  }

  std::string status;
  if (c.status == EqualityStatus::Equality) {
    status = mode == ValueMode::Exact ? "Equality" : "NumericallyTight";
  } else {
    status = "Strict";
  }
  Json route = nullptr;
  if (c.route) {
    route = *c.route == EqualityRoute::BlockGraphInduced ? "BlockGraphInduced" : "Other";
  }
  return Json{{"status", std::move(status)},
              {"route", std::move(route)},
              {"blocks", std::move(blocks)},
              {"necessary_conditions", std::move(conditions)}};
}

Json threshold_to_json(const ThresholdReport& t, ValueMode mode) {
  return Json{{"threshold", rat(t.threshold, mode)},
              {"light_mass", rat(t.light_mass, mode)},
              {"light_bound", rat(t.light_bound, mode)},
              {"heavy_mass", rat(t.heavy_mass, mode)},
              {"heavy_bound", rat(t.heavy_bound, mode)}};
}

Json block_graph_spec_to_json(const BlockGraphSpec& spec) {
  Json blocks = Json::array();
  for (const BlockSpec& b : spec.blocks) {
    Json entry{{"size", b.size}, {"attach_at", b.attach_at}};
    if (const auto* u = std::get_if<UniformWeights>(&b.weights)) {
      entry["weights"] = Json{{"kind", "uniform"}, {"value", u->value.str()}};
    } else if (const auto* ind = std::get_if<InducedWeights>(&b.weights)) {
      Json a = Json::array();
      for (const Rational& x : ind->a) a.push_back(x.str());
      entry["weights"] = Json{{"kind", "induced"}, {"a", std::move(a)}};
    } else {
      const auto& ex = std::get<ExplicitWeights>(b.weights);
      Json w = Json::array();
      for (const Rational& x : ex.w) w.push_back(x.str());
      entry["weights"] = Json{{"kind", "explicit"}, {"w", std::move(w)}};
    }
    blocks.push_back(std::move(entry));
  }
  return Json{{"blocks", std::move(blocks)}};
}

BlockGraphSpec block_graph_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a block-graph spec must be a JSON object");
  const Json& blocks = field(j, "blocks", "the spec object");
  if (!blocks.is_array()) throw ParseError("\"blocks\" must be an array");

  BlockGraphSpec spec;
  for (const Json& entry : blocks) {
    if (!entry.is_object()) throw ParseError("every block must be an object");
    BlockSpec block;
    const Json& size = field(entry, "size", "a block");
    if (!size.is_number_integer()) throw ParseError("block \"size\" must be an integer");
    block.size = size.get<int>();
    if (auto it = entry.find("attach_at"); it != entry.end() && !it->is_null()) {
      if (!it->is_number_integer()) throw ParseError("\"attach_at\" must be an integer");
      block.attach_at = it->get<VertexId>();
    } else {
      block.attach_at = -1;
    }

    const Json& weights = field(entry, "weights", "a block");
    const Json& kind = field(weights, "kind", "a block's weights");
    if (kind == "uniform") {
      block.weights =
          UniformWeights{rational_from_json(field(weights, "value", "uniform weights"),
                                            "the uniform weight")};
    } else if (kind == "induced") {
      const Json& a = field(weights, "a", "induced weights");
      if (!a.is_array()) throw ParseError("induced \"a\" must be an array");
      InducedWeights ind;
      for (const Json& x : a) ind.a.push_back(rational_from_json(x, "a vertex value"));
      block.weights = std::move(ind);
    } else if (kind == "explicit") {
      const Json& w = field(weights, "w", "explicit weights");
      if (!w.is_array()) throw ParseError("explicit \"w\" must be an array");
      ExplicitWeights ex;
      for (const Json& x : w) ex.w.push_back(rational_from_json(x, "an edge weight"));
      block.weights = std::move(ex);
    } else {
      throw ParseError("weights \"kind\" must be uniform, induced, or explicit");
    }
    spec.blocks.push_back(std::move(block));
  }
  return spec;
}

}  // namespace cyclebound
