#ifndef CHIPFIRE_DIFFCON_HPP
#define CHIPFIRE_DIFFCON_HPP

#include <optional>
#include <vector>

#include "chipfire/rational.hpp"

namespace chipfire {

// A system of strict difference constraints  x_i - x_j < bound.
// Feasible over the reals iff the arc digraph (j -> i, weight bound) has no
// directed cycle of total weight <= 0. Detection scales each weight w to
// M*w - 1 (M = #arcs + 1): a simple cycle then has negative scaled weight
// exactly when its original weight is <= 0, so textbook negative-cycle
// detection applies with exact integers.
class StrictDiffSystem {
public:
    explicit StrictDiffSystem(int n_vars) : n_(n_vars) {}

    int n_vars() const { return n_; }

    // x_i - x_j < bound
    void add_less(int i, int j, const Rat& bound);

    bool feasible() const;

    // A rational point satisfying every constraint, or nullopt.
    std::optional<std::vector<Rat>> solve() const;

    // Feasibility of this system with x_i - x_j = value added as an equality
    // (the other constraints stay strict). Implemented by contracting j into
    // i with the given offset.
    bool feasible_with_equality(int i, int j, const Rat& value) const;

    struct Constraint {
        int i, j;
        Rat bound;
    };
    const std::vector<Constraint>& constraints() const { return cons_; }

private:
    int n_;
    std::vector<Constraint> cons_;
};

}  // namespace chipfire

#endif
