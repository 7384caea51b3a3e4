#ifndef CHIPFIRE_DISPLACED_HPP
#define CHIPFIRE_DISPLACED_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire {

// Hyperplane offsets A_ij for every ordered adjacent pair: the arrangement
// consists of x_i - x_j = A_ij. A_ij + A_ji must be nonzero per edge, so that
// each edge contributes two distinct hyperplanes.
class DisplacementMatrix {
public:
    DisplacementMatrix(const Graph& g, std::map<std::pair<int, int>, Rat> entries);
    static DisplacementMatrix all_ones(const Graph& g);

    const Rat& at(int i, int j) const;
    const Graph& graph() const { return g_; }

private:
    Graph g_;
    std::map<std::pair<int, int>, Rat> entries_;
};

// One hyperplane x_i - x_j = value.
struct Hyperplane {
    int i, j;
    Rat value;
};

// Hyperplanes of the arrangement in a fixed order: for each edge {u,v}
// (u < v, edge-index order) first (u,v,A_uv) then (v,u,A_vu).
std::vector<Hyperplane> hyperplanes_of(const DisplacementMatrix& a);

enum class Side : char { Less = 0, Greater = 1 };

// Which side of each hyperplane a region lies on, aligned with
// hyperplanes_of. Less on (i,j,a) means x_i - x_j < a.
using SideVector = std::vector<Side>;

std::string side_vector_string(const SideVector& s);

bool ha_region_feasible(const DisplacementMatrix& a, const SideVector& s);
bool ha_central_exists(const DisplacementMatrix& a);

// All feasible side vectors, lexicographic (Less before Greater).
std::vector<SideVector> ha_regions(const DisplacementMatrix& a);

// Two regions are adjacent iff they differ on exactly one hyperplane's side
// and the system with that constraint tightened to equality stays feasible.
bool ha_adjacent(const DisplacementMatrix& a, const SideVector& r1, const SideVector& r2);

struct HaConjectureReport {
    bool has_central = false;
    size_t region_count = 0;
    bool path_consistent = false;
    bool labels_equal_quasi_superstables = false;
    size_t distinct_labels = 0;
    size_t quasi_superstable_count = 0;
    std::vector<std::string> conflicts;          // textual description per conflict
    std::map<std::string, Divisor> labels;       // side-vector string -> label
};

// BFS-labels the regions from the central one (label -1 everywhere; crossing
// x_i - x_j = A_ij toward the > side adds 1 at v_i) and reports whether the
// labels are path-consistent and whether the distinct labels are exactly the
// quasi-superstables. Findings only; nothing here asserts the outcome.
HaConjectureReport ha_label_and_test_conjecture(const DisplacementMatrix& a);

}  // namespace chipfire

#endif
