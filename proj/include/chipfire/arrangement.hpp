#ifndef CHIPFIRE_ARRANGEMENT_HPP
#define CHIPFIRE_ARRANGEMENT_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire {

// A region of the semiorder arrangement of g (hyperplanes x_i - x_j = 1 per
// ordered adjacent pair), represented losslessly by its semiorientation:
//   arrow (u,v)  <->  x_v > x_u + 1,   blank {u,v}  <->  |x_u - x_v| < 1.
struct Region {
    PartialOrientation orientation;
    bool operator==(const Region&) const = default;
    auto operator<=>(const Region&) const = default;
};

Region rho(const Graph& g, const PartialOrientation& o);  // validates o
PartialOrientation tau(const Region& r);

// An exact rational point inside the region of o; the semiorder it induces is
// compatible with o.
std::vector<Rat> realize_region(const Graph& g, const PartialOrientation& o);

using LabelMap = std::map<PartialOrientation, Divisor>;

// Pak-Stanley labels of every region: BFS outward from the all-blank central
// region (label -1 everywhere); orienting blank edge {u,v} as (u,v) while
// crossing a facet adds 1 at v. Queue order is a parameter so tests can check
// path-independence; labels always equal psi of the region's orientation.
LabelMap pak_stanley_labels(const Graph& g);
LabelMap pak_stanley_labels(const Graph& g, unsigned long long queue_seed);

// Sink version: regions are the semiorientations with v0 a full source;
// hyperplanes only involve nonsink pairs. Central label: 0 at neighbors of
// v0, -1 elsewhere (including v0).
LabelMap sink_arrangement_labels(const Graph& g, int v0);
LabelMap sink_arrangement_labels(const Graph& g, int v0, unsigned long long queue_seed);

std::vector<PartialOrientation> enumerate_sink_semiorientations(const Graph& g, int v0);
std::vector<PartialOrientation> enumerate_admissible_semiorientations(const Graph& g, int v0);

// G-parking functions (superstables with -1 appended at the sink), computed
// three independent ways and checked for agreement:
//   psi over the admissible semiorientations,
//   sandpile superstable enumeration,
//   distinct labels of the admissible sink-arrangement regions.
std::set<Divisor> extract_parking_functions(const Graph& g, int v0);

struct MaximalSuperstableReport {
    bool degree_bound_holds = false;       // deg <= genus for all superstables
    bool equality_iff_maximal = false;
    bool maximal_matches_smax = false;     // maximal ss <-> S~0 ∩ S_max
    bool acyclic_unique_source_count = false;
    long long n_maximal = 0;
    long long n_acyclic_v0_unique_source = 0;
    bool all_pass() const {
        return degree_bound_holds && equality_iff_maximal && maximal_matches_smax &&
               acyclic_unique_source_count;
    }
};

MaximalSuperstableReport maximal_superstable_check(const Graph& g, int v0);

// 2D coordinates for drawing a sink arrangement with exactly 3 nonsink
// vertices: a rational interior point per region projected onto the
// sum-zero plane.
std::map<PartialOrientation, std::pair<double, double>> region_plot_coordinates(const Graph& g,
                                                                                int v0);

}  // namespace chipfire

#endif
