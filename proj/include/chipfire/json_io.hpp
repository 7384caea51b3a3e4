#ifndef CHIPFIRE_JSON_IO_HPP
#define CHIPFIRE_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "chipfire/arrangement.hpp"
#include "chipfire/burning.hpp"
#include "chipfire/displaced.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/semiorder.hpp"

namespace chipfire {

using json = nlohmann::json;

struct GraphFile {
    Graph graph;
    std::optional<int> sink;
};

// {"n": <count>, "edges": [[i,j], ...]} with optional "sink". Loops,
// duplicate edges, disconnection and out-of-range indices are rejected with
// a descriptive error.
GraphFile graph_from_json(const json& j);
GraphFile load_graph_file(const std::string& path);
json graph_to_json(const Graph& g, std::optional<int> sink = std::nullopt);

// {"edges": [[i,j], ...], "states": ["blank"|"fwd"|"rev", ...]} parallel arrays
json orientation_to_json(const Graph& g, const PartialOrientation& o);
PartialOrientation orientation_from_json(const Graph& g, const json& j);

// {"n": k, "less": [[i,j], ...]}
json semiorder_to_json(const Semiorder& p);
Semiorder semiorder_from_json(const json& j);

json trace_to_json(const Graph& g, const BurnTrace& t);

json labels_to_json(const Graph& g, const LabelMap& labels);

// [[i, j, "p/q"], ...] over all ordered adjacent pairs
DisplacementMatrix displacement_from_json(const Graph& g, const json& j);
json displacement_to_json(const DisplacementMatrix& a);

json ha_report_to_json(const HaConjectureReport& rep);

// region-adjacency graph (one node per region, labels as node attributes)
std::string labels_to_dot(const Graph& g, const LabelMap& labels);

}  // namespace chipfire

#endif
