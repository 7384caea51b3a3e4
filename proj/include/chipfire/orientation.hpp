#ifndef CHIPFIRE_ORIENTATION_HPP
#define CHIPFIRE_ORIENTATION_HPP

#include <set>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire {

// Per-edge state. Forward points from the lower to the higher endpoint of the
// canonical edge pair.
enum class EdgeState : char { Blank = 0, Forward = 1, Backward = 2 };

struct PartialOrientation {
    std::vector<EdgeState> states;  // parallel to Graph::edges()

    PartialOrientation() = default;
    explicit PartialOrientation(int n_edges) : states(n_edges, EdgeState::Blank) {}

    bool operator==(const PartialOrientation& o) const = default;
    auto operator<=>(const PartialOrientation& o) const = default;

    bool is_blank(int e) const { return states[e] == EdgeState::Blank; }
    int n_oriented() const;

    // One char per edge in edge-index order: '0' blank, '+' forward, '-' backward.
    std::string to_string() const;
    static PartialOrientation from_string(const std::string& s);
};

// Builds an orientation from arrow pairs (tail, head); unlisted edges blank.
PartialOrientation orientation_from_arrows(const Graph& g,
                                           const std::vector<std::pair<int, int>>& arrows);
std::vector<std::pair<int, int>> arrows_of(const Graph& g, const PartialOrientation& o);

// -1 if blank, else the head vertex of edge e under o.
int edge_head(const Graph& g, const PartialOrientation& o, int e);
int edge_tail(const Graph& g, const PartialOrientation& o, int e);

int indegree(const Graph& g, const PartialOrientation& o, int v);
int outdegree(const Graph& g, const PartialOrientation& o, int v);

// Validity test, cycle route: every potential cycle (one whose blank edges
// can be directed to close a directed cycle) must have more blanks than
// arrows. Both traversal directions of each simple cycle are examined.
bool is_semiorientation_cycles(const Graph& g, const PartialOrientation& o);
bool is_semiorientation_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                               const PartialOrientation& o);

// Validity test, feasibility route: the region inequality system
// (x_head > x_tail + 1 per arrow, |x_u - x_v| < 1 per blank edge) is
// feasible. Agrees with the cycle route on every input.
bool is_semiorientation_feasible(const Graph& g, const PartialOrientation& o);

// All valid semiorientations, lexicographically sorted by state string.
// Backtracks over edges; validity is antitone in arrows, so an invalid
// partial assignment (undecided edges read as blank) prunes the subtree.
std::vector<PartialOrientation> enumerate_semiorientations(const Graph& g);

// Full orientations with no directed cycle (= the blank-free semiorientations).
std::vector<PartialOrientation> enumerate_acyclic_orientations(const Graph& g);

bool is_full_orientation(const PartialOrientation& o);

// indeg - 1 at every vertex; requires a valid semiorientation.
Divisor psi(const Graph& g, const PartialOrientation& o);

// Every edge at v0 oriented out of v0.
bool is_sink_source(const Graph& g, const PartialOrientation& o, int v0);
// Additionally indeg >= 1 at every other vertex.
bool is_admissible(const Graph& g, const PartialOrientation& o, int v0);

}  // namespace chipfire

#endif
