#include "chipfire/orientation.hpp"

#include <algorithm>
#include <stdexcept>

#include "chipfire/diffcon.hpp"

namespace chipfire {

int PartialOrientation::n_oriented() const {
    return static_cast<int>(
        std::count_if(states.begin(), states.end(), [](EdgeState s) { return s != EdgeState::Blank; }));
}

std::string PartialOrientation::to_string() const {
    std::string s;
    s.reserve(states.size());
    for (EdgeState st : states)
        s += st == EdgeState::Blank ? '0' : (st == EdgeState::Forward ? '+' : '-');
    return s;
}

PartialOrientation PartialOrientation::from_string(const std::string& s) {
    PartialOrientation o(static_cast<int>(s.size()));
    for (size_t e = 0; e < s.size(); ++e) {
        switch (s[e]) {
            case '0': o.states[e] = EdgeState::Blank; break;
            case '+': o.states[e] = EdgeState::Forward; break;
            case '-': o.states[e] = EdgeState::Backward; break;
            default: throw std::invalid_argument("orientation string must be over {0,+,-}");
        }
    }
    return o;
}

PartialOrientation orientation_from_arrows(const Graph& g,
                                           const std::vector<std::pair<int, int>>& arrows) {
    PartialOrientation o(g.n_edges());
    for (auto [tail, head] : arrows) {
        int e = g.edge_index(tail, head);
        if (e < 0) throw std::invalid_argument("arrow over a non-edge");
        if (!o.is_blank(e)) throw std::invalid_argument("edge oriented twice");
        o.states[e] = tail < head ? EdgeState::Forward : EdgeState::Backward;
    }
    return o;
}

std::vector<std::pair<int, int>> arrows_of(const Graph& g, const PartialOrientation& o) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < g.n_edges(); ++e) {
        if (o.is_blank(e)) continue;
        out.emplace_back(edge_tail(g, o, e), edge_head(g, o, e));
    }
    return out;
}

int edge_head(const Graph& g, const PartialOrientation& o, int e) {
    auto [lo, hi] = g.edges()[e];
    switch (o.states[e]) {
        case EdgeState::Forward: return hi;
        case EdgeState::Backward: return lo;
        default: return -1;
    }
}

int edge_tail(const Graph& g, const PartialOrientation& o, int e) {
    auto [lo, hi] = g.edges()[e];
    switch (o.states[e]) {
        case EdgeState::Forward: return lo;
        case EdgeState::Backward: return hi;
        default: return -1;
    }
}

int indegree(const Graph& g, const PartialOrientation& o, int v) {
    int d = 0;
    for (int w : g.neighbors(v))
        if (edge_head(g, o, g.edge_index(v, w)) == v) ++d;
    return d;
}

int outdegree(const Graph& g, const PartialOrientation& o, int v) {
    int d = 0;
    for (int w : g.neighbors(v))
        if (edge_tail(g, o, g.edge_index(v, w)) == v) ++d;
    return d;
}

namespace {

// The cycle, traversed from vertex position `start` in direction dir, is
// potential iff no edge is oriented against the traversal; in that case the
// blanks-vs-arrows count decides.
bool cycle_ok(const Graph& g, const PartialOrientation& o, const std::vector<int>& cyc) {
    int len = static_cast<int>(cyc.size());
    for (int dir = 0; dir < 2; ++dir) {
        int oriented = 0;
        bool potential = true;
        for (int k = 0; k < len && potential; ++k) {
            int a = cyc[k];
            int b = cyc[(k + 1) % len];
            if (dir == 1) std::swap(a, b);  // traversal is a -> b either way
            int head = edge_head(g, o, g.edge_index(a, b));
            if (head == a) potential = false;  // arrow against traversal
            else if (head == b) ++oriented;
        }
        if (potential && len - oriented <= oriented) return false;
    }
    return true;
}

}  // namespace

bool is_semiorientation_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                               const PartialOrientation& o) {
    for (const auto& cyc : cycles)
        if (!cycle_ok(g, o, cyc)) return false;
    return true;
}

bool is_semiorientation_cycles(const Graph& g, const PartialOrientation& o) {
    return is_semiorientation_cycles(g, simple_cycles(g), o);
}

bool is_semiorientation_feasible(const Graph& g, const PartialOrientation& o) {
    StrictDiffSystem sys(g.n_vertices());
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        if (o.is_blank(e)) {
            sys.add_less(u, v, 1);
            sys.add_less(v, u, 1);
        } else {
            // arrow tail -> head means x_head > x_tail + 1
            sys.add_less(edge_tail(g, o, e), edge_head(g, o, e), -1);
        }
    }
    return sys.feasible();
}

namespace {

// Feasibility of the region constraints contributed by edges [0, upto) only.
// Constraints accumulate monotonically along a backtracking path, so an
// infeasible prefix rules out every completion. (Validity itself is not
// monotone in arrows: orienting a blank edge can destroy a potential cycle.)
bool prefix_feasible(const Graph& g, const PartialOrientation& o, int upto) {
    StrictDiffSystem sys(g.n_vertices());
    for (int e = 0; e < upto; ++e) {
        auto [u, v] = g.edges()[e];
        if (o.is_blank(e)) {
            sys.add_less(u, v, 1);
            sys.add_less(v, u, 1);
        } else {
            sys.add_less(edge_tail(g, o, e), edge_head(g, o, e), -1);
        }
    }
    return sys.feasible();
}

}  // namespace

std::vector<PartialOrientation> enumerate_semiorientations(const Graph& g) {
    std::vector<PartialOrientation> out;
    PartialOrientation o(g.n_edges());
    auto rec = [&](auto&& self, int e) -> void {
        if (!prefix_feasible(g, o, e)) return;
        if (e == g.n_edges()) {
            out.push_back(o);
            return;
        }
        for (EdgeState st : {EdgeState::Blank, EdgeState::Forward, EdgeState::Backward}) {
            o.states[e] = st;
            self(self, e + 1);
        }
        o.states[e] = EdgeState::Blank;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartialOrientation> enumerate_acyclic_orientations(const Graph& g) {
    std::vector<PartialOrientation> out;
    for (const auto& o : enumerate_semiorientations(g))
        if (is_full_orientation(o)) out.push_back(o);
    return out;
}

bool is_full_orientation(const PartialOrientation& o) {
    return std::none_of(o.states.begin(), o.states.end(),
                        [](EdgeState s) { return s == EdgeState::Blank; });
}

Divisor psi(const Graph& g, const PartialOrientation& o) {
    if (static_cast<int>(o.states.size()) != g.n_edges())
        throw std::invalid_argument("orientation size mismatch");
    if (!is_semiorientation_feasible(g, o))
        throw std::invalid_argument("psi requires a valid semiorientation");
    Divisor d(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v) d[v] = indegree(g, o, v) - 1;
    return d;
}

bool is_sink_source(const Graph& g, const PartialOrientation& o, int v0) {
    return outdegree(g, o, v0) == g.degree(v0);
}

bool is_admissible(const Graph& g, const PartialOrientation& o, int v0) {
    if (!is_sink_source(g, o, v0)) return false;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (v != v0 && indegree(g, o, v) < 1) return false;
    return true;
}

}  // namespace chipfire
