#pragma once

#include <json.hpp>

#include "cyclebound/equality.hpp"
#include "cyclebound/generators.hpp"
#include "cyclebound/inequality.hpp"

namespace cyclebound {

using Json = nlohmann::ordered_json;

// Exact mode serializes rationals as "p/q" strings (or "p" when q = 1);
// float mode renders them as doubles and reports "numerically_tight"
// (|gap| < 1e-9) instead of exact equality.
enum class ValueMode { Exact, Float };

Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json report_to_json(const WeightedGraph& g, const InequalityReport& r,
                    ValueMode mode = ValueMode::Exact);
Json certificate_to_json(const EqualityCertificate& c, ValueMode mode = ValueMode::Exact);
Json threshold_to_json(const ThresholdReport& t, ValueMode mode = ValueMode::Exact);

Json block_graph_spec_to_json(const BlockGraphSpec& spec);
BlockGraphSpec block_graph_spec_from_json(const Json& j);

}  // namespace cyclebound
