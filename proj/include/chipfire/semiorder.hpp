#ifndef CHIPFIRE_SEMIORDER_HPP
#define CHIPFIRE_SEMIORDER_HPP

#include <optional>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/sandpile.hpp"

namespace chipfire {

// Strict partial order on 0..n-1 realizable by unit intervals: i < j iff
// interval i lies strictly left of interval j. Equivalently (Scott-Suppes)
// a strict order with no induced 2+2 and no induced 3+1.
struct Semiorder {
    int n = 0;
    std::vector<std::vector<bool>> less;  // less[i][j]: i < j

    Semiorder() = default;
    explicit Semiorder(int k) : n(k), less(k, std::vector<bool>(k, false)) {}

    bool operator==(const Semiorder&) const = default;
    auto operator<=>(const Semiorder&) const = default;

    std::vector<std::pair<int, int>> pairs() const;
    static Semiorder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
};

// Order induced by unit intervals [t_i, t_i + 1]: i < j iff t_i + 1 < t_j.
// A boundary tie t_i + 1 == t_j means the point lies on an arrangement
// hyperplane and is rejected.
Semiorder semiorder_from_point(const std::vector<Rat>& t);

// Strict-partial-order + forbidden-suborder test on an arbitrary relation.
bool is_semiorder(const Semiorder& rel);

// Interval realization via the strict difference-constraint system
//   i < j     =>  t_j - t_i > 1
//   i ∥ j     =>  |t_i - t_j| < 1.
// nullopt iff rel is not a semiorder (the independent oracle for is_semiorder).
std::optional<std::vector<Rat>> try_realize_semiorder(const Semiorder& rel);
std::vector<Rat> realize_semiorder(const Semiorder& rel);  // throws on failure

// The unique semiorientation compatible with p: edge {u,v} oriented (u,v)
// iff u < v in p.
PartialOrientation nu(const Graph& g, const Semiorder& p);

// Divisor with value n_P(v) - 1 where n_P(v) counts neighbors below v.
// Equals psi(nu(p)).
Divisor theta(const Graph& g, const Semiorder& p);

// All labeled semiorders on k elements (memoized, shared read-only).
const std::vector<Semiorder>& all_semiorders(int k);

// Semiorders p with nu(p) == o, filtered from the full enumeration.
std::vector<Semiorder> compatible_semiorders(const Graph& g, const PartialOrientation& o);

}  // namespace chipfire

#endif
