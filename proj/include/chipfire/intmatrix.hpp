#ifndef CHIPFIRE_INTMATRIX_HPP
#define CHIPFIRE_INTMATRIX_HPP

#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

using IntMatrix = std::vector<std::vector<long long>>;

// Degree matrix minus adjacency matrix, (n x n) over all vertices.
IntMatrix laplacian(const Graph& g);

// Laplacian with the sink's row and column deleted.
IntMatrix reduced_laplacian(const Graph& g, int sink);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

// det of the reduced Laplacian; by the matrix-tree theorem this counts
// spanning trees, independent of the deleted vertex.
Int spanning_tree_count(const Graph& g);

// Solves m * x = rhs over the rationals (m square, nonsingular).
// Returns the integer solution if one exists, otherwise std::nullopt-like
// empty vector with `integral` false.
struct IntSolve {
    bool solvable = false;  // m nonsingular and system consistent
    bool integral = false;  // solution is integral
    std::vector<Int> x;
};
IntSolve solve_integer(const IntMatrix& m, const std::vector<long long>& rhs);

}  // namespace chipfire

#endif
