#ifndef CHIPFIRE_TESTS_SMALL_GRAPHS_HPP
#define CHIPFIRE_TESTS_SMALL_GRAPHS_HPP

// Brute-force oracles and exhaustive small-graph generation for tests. These
// stay deliberately independent of the library's algorithms.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire::testsupport {

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

inline bool edge_set_connected(int n, const std::vector<Edge>& edges) {
    if (n == 0) return false;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (auto [u, v] : edges) comp[find(u)] = find(v);
    for (int v = 0; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// Exhaustive isomorph-free list of connected graphs on exactly n vertices.
inline std::vector<Graph> connected_graphs_exactly(int n) {
    auto pairs = all_pairs(n);
    int m = static_cast<int>(pairs.size());
    std::set<std::vector<Edge>> canon_seen;
    std::vector<Graph> out;
    std::vector<int> perm(n);
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<Edge> edges;
        for (int k = 0; k < m; ++k)
            if (mask & (1ULL << k)) edges.push_back(pairs[k]);
        if (!edge_set_connected(n, edges)) continue;
        // canonical form: lexicographically smallest relabeled edge list
        std::vector<Edge> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Edge> relabeled;
            relabeled.reserve(edges.size());
            for (auto [u, v] : edges) {
                int a = perm[u], b = perm[v];
                relabeled.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(relabeled.begin(), relabeled.end());
            if (best.empty() || relabeled < best) best = relabeled;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (canon_seen.insert(best).second) out.emplace_back(n, best);
    }
    return out;
}

inline std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : connected_graphs_exactly(n)) out.push_back(std::move(g));
    return out;
}

// Spanning trees by enumerating (|V|-1)-subsets of the edges.
inline long long brute_spanning_trees(const Graph& g) {
    int n = g.n_vertices();
    if (n == 1) return 1;
    int m = g.n_edges();
    long long count = 0;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        if (__builtin_popcountll(mask) != n - 1) continue;
        std::vector<Edge> sub;
        for (int k = 0; k < m; ++k)
            if (mask & (1ULL << k)) sub.push_back(g.edges()[k]);
        if (edge_set_connected(n, sub)) ++count;
    }
    return count;
}

// Simple cycles counted independently: for every vertex subset, count
// Hamiltonian cycles of the induced subgraph by scanning permutations.
inline long long brute_cycle_count(const Graph& g) {
    int n = g.n_vertices();
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        int k = static_cast<int>(verts.size());
        if (k < 3) continue;
        std::vector<int> perm(verts.begin(), verts.end());
        long long ham = 0;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (!g.has_edge(perm[i], perm[(i + 1) % k])) ok = false;
            if (ok) ++ham;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += ham / (2 * k);  // rotations and reflections
    }
    return total;
}

}  // namespace chipfire::testsupport

#endif
