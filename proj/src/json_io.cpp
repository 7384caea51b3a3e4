#include "chipfire/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chipfire {

GraphFile graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a pair [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GraphFile out{Graph(n, std::move(edges)), std::nullopt};
    if (j.contains("sink")) {
        int s = j.at("sink").get<int>();
        if (s < 0 || s >= n) throw std::invalid_argument("sink out of range");
        out.sink = s;
    }
    return out;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

json graph_to_json(const Graph& g, std::optional<int> sink) {
    json j;
    j["n"] = g.n_vertices();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (sink) j["sink"] = *sink;
    return j;
}

json orientation_to_json(const Graph& g, const PartialOrientation& o) {
    json j;
    j["edges"] = json::array();
    j["states"] = json::array();
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        j["edges"].push_back({u, v});
        switch (o.states[e]) {
            case EdgeState::Blank: j["states"].push_back("blank"); break;
            case EdgeState::Forward: j["states"].push_back("fwd"); break;
            case EdgeState::Backward: j["states"].push_back("rev"); break;
        }
    }
    return j;
}

PartialOrientation orientation_from_json(const Graph& g, const json& j) {
    const auto& edges = j.at("edges");
    const auto& states = j.at("states");
    if (edges.size() != states.size())
        throw std::invalid_argument("edges/states arrays differ in length");
    PartialOrientation o(g.n_edges());
    std::vector<char> seen(g.n_edges(), 0);
    for (size_t k = 0; k < edges.size(); ++k) {
        int u = edges[k][0].get<int>(), v = edges[k][1].get<int>();
        int e = g.edge_index(u, v);
        if (e < 0) throw std::invalid_argument("orientation lists a non-edge");
        if (seen[e]) throw std::invalid_argument("orientation lists an edge twice");
        seen[e] = 1;
        std::string s = states[k].get<std::string>();
        if (s == "blank") o.states[e] = EdgeState::Blank;
        else if (s == "fwd") o.states[e] = u < v ? EdgeState::Forward : EdgeState::Backward;
        else if (s == "rev") o.states[e] = u < v ? EdgeState::Backward : EdgeState::Forward;
        else throw std::invalid_argument("state must be blank|fwd|rev");
    }
    for (char c : seen)
        if (!c) throw std::invalid_argument("orientation misses an edge");
    return o;
}

json semiorder_to_json(const Semiorder& p) {
    json j;
    j["n"] = p.n;
    j["less"] = json::array();
    for (auto [a, b] : p.pairs()) j["less"].push_back({a, b});
    return j;
}

Semiorder semiorder_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("less")) pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    return Semiorder::from_pairs(n, pairs);
}

namespace {

json interval_to_json(const Interval& iv) {
    return {rat_to_string(iv.lo), rat_to_string(iv.lo + 1)};
}

}  // namespace

json trace_to_json(const Graph& g, const BurnTrace& t) {
    json j;
    j["initial_queue"] = t.initial_queue;
    j["initial_intervals"] = json::object();
    for (const auto& [v, iv] : t.initial_intervals)
        j["initial_intervals"][std::to_string(v)] = interval_to_json(iv);
    j["steps"] = json::array();
    for (const auto& s : t.steps) {
        json step;
        step["fired"] = s.fired;
        step["queue_after"] = s.queue_after;
        step["new_intervals"] = json::object();
        for (const auto& [v, iv] : s.new_intervals)
            step["new_intervals"][std::to_string(v)] = interval_to_json(iv);
        step["edge_decisions"] = json::array();
        for (auto [e, st] : s.edge_decisions) {
            auto [u, v] = g.edges()[e];
            step["edge_decisions"].push_back(
                {{"edge", {u, v}},
                 {"state", st == EdgeState::Blank ? "blank"
                                                  : (st == EdgeState::Forward ? "fwd" : "rev")}});
        }
        j["steps"].push_back(std::move(step));
    }
    return j;
}

json labels_to_json(const Graph& g, const LabelMap& labels) {
    (void)g;
    json j = json::object();
    for (const auto& [o, lbl] : labels) j[o.to_string()] = lbl;
    return j;
}

DisplacementMatrix displacement_from_json(const Graph& g, const json& j) {
    std::map<std::pair<int, int>, Rat> entries;
    const json& arr = j.is_object() && j.contains("entries") ? j.at("entries") : j;
    if (!arr.is_array()) throw std::invalid_argument("displacement JSON must be a list of triples");
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("displacement entry must be [i, j, value]");
        int i = row[0].get<int>(), jj = row[1].get<int>();
        Rat v = row[2].is_string() ? rat_from_string(row[2].get<std::string>())
                                   : Rat(row[2].get<long long>());
        entries[{i, jj}] = v;
    }
    return DisplacementMatrix(g, std::move(entries));
}

json displacement_to_json(const DisplacementMatrix& a) {
    json arr = json::array();
    for (auto [u, v] : a.graph().edges()) {
        arr.push_back({u, v, rat_to_string(a.at(u, v))});
        arr.push_back({v, u, rat_to_string(a.at(v, u))});
    }
    return json{{"entries", arr}};
}

json ha_report_to_json(const HaConjectureReport& rep) {
    json j;
    j["has_central"] = rep.has_central;
    j["region_count"] = rep.region_count;
    j["path_consistent"] = rep.path_consistent;
    j["labels_equal_quasi_superstables"] = rep.labels_equal_quasi_superstables;
    j["distinct_labels"] = rep.distinct_labels;
    j["quasi_superstable_count"] = rep.quasi_superstable_count;
    j["conflicts"] = rep.conflicts;
    return j;
}

std::string labels_to_dot(const Graph& g, const LabelMap& labels) {
    std::ostringstream out;
    out << "graph regions {\n";
    std::map<PartialOrientation, int> id;
    int next = 0;
    for (const auto& [o, lbl] : labels) {
        id[o] = next;
        out << "  r" << next << " [label=\"" << o.to_string() << "\\n(";
        for (size_t i = 0; i < lbl.size(); ++i) out << (i ? "," : "") << lbl[i];
        out << ")\"];\n";
        ++next;
    }
    // adjacency: one added arrow apart
    for (const auto& [o, lbl] : labels) {
        for (int e = 0; e < g.n_edges(); ++e) {
            if (!o.is_blank(e)) continue;
            for (EdgeState st : {EdgeState::Forward, EdgeState::Backward}) {
                PartialOrientation next_o = o;
                next_o.states[e] = st;
                auto it = labels.find(next_o);
                if (it != labels.end())
                    out << "  r" << id[o] << " -- r" << id[next_o] << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace chipfire
