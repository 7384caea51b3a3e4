#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chipfire/arrangement.hpp"
#include "chipfire/burning.hpp"
#include "chipfire/displaced.hpp"
#include "chipfire/intmatrix.hpp"
#include "chipfire/json_io.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/sandpile.hpp"
#include "chipfire/semiorder.hpp"
#include "chipfire/semiorder_count.hpp"
#include "chipfire/verify.hpp"

namespace py = pybind11;
using namespace chipfire;

namespace {

py::object big_to_py(const Int& v) {
    // route through the decimal string so arbitrary precision survives
    return py::int_(py::str(v.str()));
}

std::vector<Rat> rats_from_strings(const std::vector<std::string>& in) {
    std::vector<Rat> out;
    out.reserve(in.size());
    for (const auto& s : in) out.push_back(rat_from_string(s));
    return out;
}

std::vector<std::string> rats_to_strings(const std::vector<Rat>& in) {
    std::vector<std::string> out;
    out.reserve(in.size());
    for (const auto& r : in) out.push_back(rat_to_string(r));
    return out;
}

PartialOrientation parse_orientation(const Graph& g, const std::string& s) {
    PartialOrientation o = PartialOrientation::from_string(s);
    if (static_cast<int>(o.states.size()) != g.n_edges())
        throw std::invalid_argument("orientation string length does not match edge count");
    return o;
}

py::dict labels_to_dict(const LabelMap& labels) {
    py::dict out;
    for (const auto& [o, lbl] : labels) out[py::str(o.to_string())] = lbl;
    return out;
}

std::vector<std::pair<int, int>> semiorder_pairs(const Semiorder& p) { return p.pairs(); }

}  // namespace

PYBIND11_MODULE(_chipfire, m) {
    m.doc() = "chip-firing, semiorder arrangements and Pak-Stanley labels";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n_vertices", &Graph::n_vertices)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def_static("from_json", [](const std::string& text) {
            auto gf = graph_from_json(json::parse(text));
            return py::make_tuple(gf.graph, gf.sink ? py::object(py::int_(*gf.sink))
                                                    : py::object(py::none()));
        })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n_vertices() << ", edges=" << g.n_edges() << ")";
            return s.str();
        });

    // graph-core
    m.def("laplacian", &laplacian);
    m.def("reduced_laplacian", &reduced_laplacian);
    m.def("genus", &genus);
    m.def("cone", &cone);
    m.def("cone_missing", [](const Graph& g, int v0) {
        auto cm = cone_missing(g, v0);
        return py::make_tuple(cm.graph, cm.missing);
    });
    m.def("simple_cycles", &simple_cycles);
    m.def("spanning_tree_count",
          [](const Graph& g) { return big_to_py(spanning_tree_count(g)); });

    // sandpile
    m.def("fire_set", &fire_set);
    m.def("stabilize", [](const Graph& g, int sink, const Config& c) {
        auto r = stabilize(g, sink, c);
        return py::make_tuple(r.config, r.firings);
    });
    m.def("max_stable", &max_stable);
    m.def("is_stable", &is_stable);
    m.def("is_superstable", &is_superstable);
    m.def("is_recurrent", &is_recurrent);
    m.def("duality_pair", &duality_pair);
    m.def("enumerate_superstables", [](const Graph& g, int sink) {
        auto s = enumerate_superstables(g, sink);
        return std::vector<Config>(s.begin(), s.end());
    });
    m.def("is_quasi_superstable", &is_quasi_superstable);
    m.def("enumerate_quasi_superstables", [](const Graph& g) {
        auto s = enumerate_quasi_superstables(g);
        return std::vector<Divisor>(s.begin(), s.end());
    });

    // orientations (canonical strings over {0,+,-} in edge-index order)
    m.def("enumerate_semiorientations", [](const Graph& g) {
        std::vector<std::string> out;
        for (const auto& o : enumerate_semiorientations(g)) out.push_back(o.to_string());
        return out;
    });
    m.def("is_semiorientation", [](const Graph& g, const std::string& s) {
        return is_semiorientation_feasible(g, parse_orientation(g, s));
    });
    m.def("psi",
          [](const Graph& g, const std::string& s) { return psi(g, parse_orientation(g, s)); });
    m.def("enumerate_acyclic_orientations", [](const Graph& g) {
        std::vector<std::string> out;
        for (const auto& o : enumerate_acyclic_orientations(g)) out.push_back(o.to_string());
        return out;
    });
    m.def("is_sink_source", [](const Graph& g, const std::string& s, int v0) {
        return is_sink_source(g, parse_orientation(g, s), v0);
    });
    m.def("is_admissible", [](const Graph& g, const std::string& s, int v0) {
        return is_admissible(g, parse_orientation(g, s), v0);
    });
    m.def("orientation_from_arrows",
          [](const Graph& g, const std::vector<std::pair<int, int>>& arrows) {
              return orientation_from_arrows(g, arrows).to_string();
          });

    // semiorders (lists of strict pairs)
    m.def("semiorder_from_point", [](const Graph& g, const std::vector<std::string>& point) {
        (void)g;
        return semiorder_pairs(semiorder_from_point(rats_from_strings(point)));
    });
    m.def("semiorder_from_point",
          [](const std::vector<std::string>& point) {
              return semiorder_pairs(semiorder_from_point(rats_from_strings(point)));
          });
    m.def("is_semiorder", [](int n, const std::vector<std::pair<int, int>>& pairs) {
        return is_semiorder(Semiorder::from_pairs(n, pairs));
    });
    m.def("realize_semiorder", [](int n, const std::vector<std::pair<int, int>>& pairs) {
        return rats_to_strings(realize_semiorder(Semiorder::from_pairs(n, pairs)));
    });
    m.def("nu", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
        return nu(g, Semiorder::from_pairs(g.n_vertices(), pairs)).to_string();
    });
    m.def("theta", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
        return theta(g, Semiorder::from_pairs(g.n_vertices(), pairs));
    });
    m.def("compatible_semiorders", [](const Graph& g, const std::string& s) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& p : compatible_semiorders(g, parse_orientation(g, s)))
            out.push_back(p.pairs());
        return out;
    });
    m.def("labeled_semiorder_counts", [](int max_k) {
        py::list out;
        for (const Int& f : labeled_semiorder_counts_egf(max_k)) out.append(big_to_py(f));
        return out;
    });

    // burning algorithm
    m.def("run_burning", [](const Graph& g, const Divisor& c, const VertexOrdering& sigma) {
        BurnResult r = run_burning(g, c, sigma);
        py::dict out;
        out["orientation"] = r.orientation.to_string();
        out["semiorder"] = r.semiorder.pairs();
        std::vector<std::pair<std::string, std::string>> ivals;
        for (const auto& iv : r.intervals)
            ivals.emplace_back(rat_to_string(iv.lo), rat_to_string(iv.lo + 1));
        out["intervals"] = ivals;
        out["firing_order"] = r.trace.firing_order();
        out["trace"] = trace_to_json(g, r.trace).dump();
        return out;
    });

    // arrangements and labels
    m.def("realize_region", [](const Graph& g, const std::string& s) {
        return rats_to_strings(realize_region(g, parse_orientation(g, s)));
    });
    m.def("pak_stanley_labels",
          [](const Graph& g) { return labels_to_dict(pak_stanley_labels(g)); });
    m.def("sink_arrangement_labels", [](const Graph& g, int v0) {
        return labels_to_dict(sink_arrangement_labels(g, v0));
    });
    m.def("parking_functions", [](const Graph& g, int v0) {
        auto p = extract_parking_functions(g, v0);
        return std::vector<Divisor>(p.begin(), p.end());
    });

    // verification and the displaced-arrangement scan
    m.def("verify", [](const Graph& g) {
        VerifyReport rep = run_verification(g);
        py::dict out;
        for (const auto& e : rep.entries) out[py::str(e.name)] = e.pass;
        out["all_pass"] = rep.all_pass();
        return out;
    });
    m.def("ha_conjecture_report",
          [](const Graph& g, const std::vector<std::tuple<int, int, std::string>>& entries) {
              std::map<std::pair<int, int>, Rat> m2;
              for (const auto& [i, j, v] : entries) m2[{i, j}] = rat_from_string(v);
              DisplacementMatrix a(g, std::move(m2));
              return ha_report_to_json(ha_label_and_test_conjecture(a)).dump();
          });
}
