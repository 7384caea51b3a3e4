#include "chipfire/intmatrix.hpp"

#include <stdexcept>

namespace chipfire {

IntMatrix laplacian(const Graph& g) {
    int n = g.n_vertices();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = g.degree(v);
    for (auto [u, v] : g.edges()) {
        m[u][v] = -1;
        m[v][u] = -1;
    }
    return m;
}

IntMatrix reduced_laplacian(const Graph& g, int sink) {
    if (sink < 0 || sink >= g.n_vertices()) throw std::invalid_argument("sink out of range");
    IntMatrix full = laplacian(g);
    IntMatrix m;
    for (int i = 0; i < g.n_vertices(); ++i) {
        if (i == sink) continue;
        std::vector<long long> row;
        for (int j = 0; j < g.n_vertices(); ++j)
            if (j != sink) row.push_back(full[i][j]);
        m.push_back(std::move(row));
    }
    return m;
}

Int determinant(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;  // empty product convention (single-vertex graph)
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    // Bareiss: exact integer elimination, previous pivot divides evenly.
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Int spanning_tree_count(const Graph& g) { return determinant(reduced_laplacian(g, 0)); }

IntSolve solve_integer(const IntMatrix& m, const std::vector<long long>& rhs) {
    IntSolve out;
    size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("rhs size mismatch");
    Int det = determinant(m);
    if (det == 0) return out;
    out.solvable = true;
    out.integral = true;
    out.x.resize(n);
    // Cramer's rule; fine at desk scale and keeps everything exact.
    for (size_t j = 0; j < n; ++j) {
        IntMatrix mj = m;
        for (size_t i = 0; i < n; ++i) mj[i][j] = rhs[i];
        Int dj = determinant(mj);
        if (dj % det != 0) {
            out.integral = false;
            out.x.clear();
            return out;
        }
        out.x[j] = dj / det;
    }
    return out;
}

}  // namespace chipfire
