#ifndef CHIPFIRE_BURNING_HPP
#define CHIPFIRE_BURNING_HPP

#include <map>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/sandpile.hpp"
#include "chipfire/semiorder.hpp"

namespace chipfire {

// Firing-priority sequence of the vertices 0..n-1 (a permutation).
using VertexOrdering = std::vector<int>;

struct Interval {
    Rat lo;  // unit length: the interval is [lo, lo + 1]
    bool operator==(const Interval&) const = default;
};

struct BurnStep {
    int fired;
    std::vector<int> queue_after;
    std::vector<std::pair<int, Interval>> new_intervals;      // newly unstable vertices
    std::vector<std::pair<int, EdgeState>> edge_decisions;    // edge index -> decision
};

struct BurnTrace {
    std::vector<int> initial_queue;
    std::vector<std::pair<int, Interval>> initial_intervals;
    std::vector<BurnStep> steps;
    std::vector<int> firing_order() const;
};

struct BurnResult {
    Semiorder semiorder;           // order of the assigned unit intervals
    PartialOrientation orientation;
    std::vector<Interval> intervals;  // per vertex
    BurnTrace trace;
};

// Dhar-style burning run on the cone of g, seeded with b = c_max - c.
// Every vertex fires exactly once; edges are decided as their endpoints fire
// (blank if the far end is already unstable, else oriented out of the firing
// vertex). Produces the semiorder of the assigned intervals and the matching
// semiorientation. c must be quasi-superstable; sigma a permutation.
BurnResult run_burning(const Graph& g, const Divisor& c, const VertexOrdering& sigma);

// The fixed-ordering sections through run_burning.
PartialOrientation eta_section(const Graph& g, const Divisor& c, const VertexOrdering& sigma);
Semiorder phi_section(const Graph& g, const Divisor& c, const VertexOrdering& sigma);

struct DiagramCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct DiagramReport {
    std::vector<DiagramCheck> checks;
    // informational, not a failure: which semiorientations are never produced
    size_t eta_image_size = 0;
    size_t semiorientation_count = 0;
    bool all_pass() const;
};

// Exhaustive check of the commuting identities (theta . phi = pi,
// nu . phi = eta, psi . nu = theta) and the surjectivity of psi, theta, nu
// over all quasi-superstables and all orderings (capped at max_orderings,
// 0 = no cap).
DiagramReport verify_diagram(const Graph& g, size_t max_orderings = 0);

std::vector<VertexOrdering> all_orderings(int n, size_t cap = 0);

}  // namespace chipfire

#endif
