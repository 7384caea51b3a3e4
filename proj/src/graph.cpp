#include "chipfire/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chipfire {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
    if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    edge_index_.assign(n_, std::vector<int>(n_, -1));
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edge_index_[u][v] = edge_index_[v][u] = e;
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n_) throw std::invalid_argument("graph is not connected");
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    return edge_index_[u][v];
}

int genus(const Graph& g) { return g.n_edges() - g.n_vertices() + 1; }

Graph cone(const Graph& g) {
    int apex = g.n_vertices();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < apex; ++v) edges.emplace_back(v, apex);
    return Graph(apex + 1, std::move(edges));
}

ConeMissing cone_missing(const Graph& g, int v0) {
    if (v0 < 0 || v0 >= g.n_vertices()) throw std::invalid_argument("v0 out of range");
    std::vector<Edge> edges = g.edges();
    std::vector<int> missing;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (v == v0 || g.has_edge(v, v0)) continue;
        missing.push_back(v);
        edges.emplace_back(std::min(v, v0), std::max(v, v0));
    }
    return {Graph(g.n_vertices(), std::move(edges)), std::move(missing)};
}

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> in_path(g.n_vertices(), 0);

    // Paths start at the cycle's smallest vertex; only larger vertices may
    // appear later, and path[1] < path.back() kills the reflected copy.
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (w < start || in_path[w]) continue;
            path.push_back(w);
            in_path[w] = 1;
            self(self, start, w);
            in_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n_vertices(); ++s) {
        path = {s};
        in_path.assign(g.n_vertices(), 0);
        in_path[s] = 1;
        dfs(dfs, s, s);
    }
    return cycles;
}

}  // namespace chipfire
