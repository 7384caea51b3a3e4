#include "chipfire/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "chipfire/diffcon.hpp"

namespace chipfire {

Region rho(const Graph& g, const PartialOrientation& o) {
    if (!is_semiorientation_feasible(g, o))
        throw std::invalid_argument("not a valid semiorientation");
    return Region{o};
}

PartialOrientation tau(const Region& r) { return r.orientation; }

std::vector<Rat> realize_region(const Graph& g, const PartialOrientation& o) {
    StrictDiffSystem sys(g.n_vertices());
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        if (o.is_blank(e)) {
            sys.add_less(u, v, 1);
            sys.add_less(v, u, 1);
        } else {
            sys.add_less(edge_tail(g, o, e), edge_head(g, o, e), -1);
        }
    }
    auto t = sys.solve();
    if (!t) throw std::invalid_argument("region system infeasible: not a valid semiorientation");
    return *t;
}

namespace {

// Generic Pak-Stanley BFS over semiorientations reachable from `central` by
// adding arrows to the free (non-fixed) edges. Labels grow incrementally and
// revisits are checked for consistency.
LabelMap label_bfs(const Graph& g, const PartialOrientation& central, const Divisor& central_label,
                   const std::vector<char>& edge_fixed, std::optional<unsigned long long> seed) {
    LabelMap labels;
    labels[central] = central_label;
    std::vector<PartialOrientation> frontier = {central};
    std::mt19937_64 rng(seed.value_or(0));

    while (!frontier.empty()) {
        size_t pick = 0;
        if (seed) pick = rng() % frontier.size();
        PartialOrientation o = frontier[pick];
        frontier.erase(frontier.begin() + pick);
        const Divisor& base = labels.at(o);

        for (int e = 0; e < g.n_edges(); ++e) {
            if (!o.is_blank(e) || edge_fixed[e]) continue;
            for (EdgeState st : {EdgeState::Forward, EdgeState::Backward}) {
                PartialOrientation next = o;
                next.states[e] = st;
                if (!is_semiorientation_feasible(g, next)) continue;
                Divisor lbl = base;
                lbl[edge_head(g, next, e)] += 1;
                auto [it, inserted] = labels.emplace(next, lbl);
                if (inserted) frontier.push_back(next);
                else if (it->second != lbl)
                    throw std::logic_error("Pak-Stanley labeling is path-inconsistent");
            }
        }
    }
    return labels;
}

}  // namespace

LabelMap pak_stanley_labels(const Graph& g) {
    PartialOrientation blank(g.n_edges());
    Divisor minus_one(g.n_vertices(), -1);
    return label_bfs(g, blank, minus_one, std::vector<char>(g.n_edges(), 0), std::nullopt);
}

LabelMap pak_stanley_labels(const Graph& g, unsigned long long queue_seed) {
    PartialOrientation blank(g.n_edges());
    Divisor minus_one(g.n_vertices(), -1);
    return label_bfs(g, blank, minus_one, std::vector<char>(g.n_edges(), 0), queue_seed);
}

namespace {

LabelMap sink_labels_impl(const Graph& g, int v0, std::optional<unsigned long long> seed) {
    if (v0 < 0 || v0 >= g.n_vertices()) throw std::invalid_argument("sink out of range");
    PartialOrientation central(g.n_edges());
    std::vector<char> fixed(g.n_edges(), 0);
    for (int w : g.neighbors(v0)) {
        int e = g.edge_index(v0, w);
        central.states[e] = v0 < w ? EdgeState::Forward : EdgeState::Backward;
        fixed[e] = 1;
    }
    Divisor label(g.n_vertices(), -1);
    for (int w : g.neighbors(v0)) label[w] = 0;
    return label_bfs(g, central, label, fixed, seed);
}

}  // namespace

LabelMap sink_arrangement_labels(const Graph& g, int v0) {
    return sink_labels_impl(g, v0, std::nullopt);
}

LabelMap sink_arrangement_labels(const Graph& g, int v0, unsigned long long queue_seed) {
    return sink_labels_impl(g, v0, queue_seed);
}

std::vector<PartialOrientation> enumerate_sink_semiorientations(const Graph& g, int v0) {
    std::vector<PartialOrientation> out;
    for (const auto& o : enumerate_semiorientations(g))
        if (is_sink_source(g, o, v0)) out.push_back(o);
    return out;
}

std::vector<PartialOrientation> enumerate_admissible_semiorientations(const Graph& g, int v0) {
    std::vector<PartialOrientation> out;
    for (const auto& o : enumerate_semiorientations(g))
        if (is_admissible(g, o, v0)) out.push_back(o);
    return out;
}

std::set<Divisor> extract_parking_functions(const Graph& g, int v0) {
    std::set<Divisor> via_psi;
    for (const auto& o : enumerate_admissible_semiorientations(g, v0)) via_psi.insert(psi(g, o));

    std::set<Divisor> via_sandpile;
    for (const Config& c : enumerate_superstables(g, v0)) {
        Divisor d(g.n_vertices());
        d[v0] = -1;
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != v0) d[v] = c[cfg_index(v, v0)];
        via_sandpile.insert(d);
    }

    std::set<Divisor> via_labels;
    for (const auto& [o, lbl] : sink_arrangement_labels(g, v0))
        if (is_admissible(g, o, v0)) via_labels.insert(lbl);

    if (via_psi != via_sandpile || via_psi != via_labels)
        throw std::logic_error("parking-function routes disagree");
    return via_psi;
}

MaximalSuperstableReport maximal_superstable_check(const Graph& g, int v0) {
    MaximalSuperstableReport rep;
    auto superstables = enumerate_superstables(g, v0);
    long long gen = genus(g);

    auto leq = [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::set<Config> maximal;
    for (const Config& c : superstables) {
        bool is_max = true;
        for (const Config& d : superstables)
            if (d != c && leq(c, d)) { is_max = false; break; }
        if (is_max) maximal.insert(c);
    }
    rep.n_maximal = static_cast<long long>(maximal.size());

    rep.degree_bound_holds = true;
    rep.equality_iff_maximal = true;
    for (const Config& c : superstables) {
        long long deg = divisor_degree(c);
        if (deg > gen) rep.degree_bound_holds = false;
        if ((deg == gen) != (maximal.count(c) > 0)) rep.equality_iff_maximal = false;
    }

    // maximal superstables <-> admissible-sink quasi-superstables that are
    // maximal among all quasi-superstables
    auto quasis = enumerate_quasi_superstables(g);
    std::set<Divisor> smax;
    for (const Divisor& c : quasis) {
        bool is_max = true;
        for (const Divisor& d : quasis)
            if (d != c && leq(c, d)) { is_max = false; break; }
        if (is_max) smax.insert(c);
    }
    std::set<Divisor> lhs;
    for (const Config& c : maximal) {
        Divisor d(g.n_vertices());
        d[v0] = -1;
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != v0) d[v] = c[cfg_index(v, v0)];
        lhs.insert(d);
    }
    std::set<Divisor> rhs;
    for (const Divisor& c : smax) {
        if (c[v0] != -1) continue;
        bool nonneg_elsewhere = true;
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != v0 && c[v] < 0) nonneg_elsewhere = false;
        if (nonneg_elsewhere) rhs.insert(c);
    }
    rep.maximal_matches_smax = lhs == rhs;

    long long unique_source = 0;
    for (const auto& o : enumerate_acyclic_orientations(g)) {
        if (!is_sink_source(g, o, v0)) continue;
        bool only_source = true;
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != v0 && indegree(g, o, v) == 0) only_source = false;
        if (only_source) ++unique_source;
    }
    rep.n_acyclic_v0_unique_source = unique_source;
    rep.acyclic_unique_source_count = unique_source == rep.n_maximal;
    return rep;
}

std::map<PartialOrientation, std::pair<double, double>> region_plot_coordinates(const Graph& g,
                                                                                int v0) {
    if (g.n_vertices() != 4)
        throw std::invalid_argument("plot coordinates need exactly 3 nonsink vertices");
    std::map<PartialOrientation, std::pair<double, double>> out;
    for (const auto& o : enumerate_sink_semiorientations(g, v0)) {
        // constraints of the sink arrangement: nonsink pairs only
        StrictDiffSystem sys(g.n_vertices());
        for (int e = 0; e < g.n_edges(); ++e) {
            auto [u, v] = g.edges()[e];
            if (u == v0 || v == v0) continue;
            if (o.is_blank(e)) {
                sys.add_less(u, v, 1);
                sys.add_less(v, u, 1);
            } else {
                sys.add_less(edge_tail(g, o, e), edge_head(g, o, e), -1);
            }
        }
        auto t = sys.solve();
        if (!t) throw std::logic_error("sink region unexpectedly infeasible");
        double p[3];
        int k = 0;
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != v0) p[k++] = static_cast<double>(numerator((*t)[v])) /
                                  static_cast<double>(denominator((*t)[v]));
        double mean = (p[0] + p[1] + p[2]) / 3.0;
        for (double& x : p) x -= mean;
        out[o] = {(p[0] - p[1]) / std::sqrt(2.0), (p[0] + p[1] - 2 * p[2]) / std::sqrt(6.0)};
    }
    return out;
}

}  // namespace chipfire
