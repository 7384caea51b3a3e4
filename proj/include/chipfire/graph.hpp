#ifndef CHIPFIRE_GRAPH_HPP
#define CHIPFIRE_GRAPH_HPP

#include <utility>
#include <vector>

namespace chipfire {

using Edge = std::pair<int, int>;  // canonical form: first < second

/// Finite simple connected undirected graph with vertices 0..n-1.
/// Connectivity and simplicity are enforced at construction.
class Graph {
public:
    Graph(int n_vertices, std::vector<Edge> edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    // Index of edge {u,v} in edges(), -1 if absent.
    int edge_index(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;            // sorted, each pair (lo, hi)
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<std::vector<int>> edge_index_;
};

int genus(const Graph& g);

// Graph with one extra vertex (index n_vertices()) joined to every vertex.
// The new vertex is the conventional sink of the result.
Graph cone(const Graph& g);

struct ConeMissing {
    Graph graph;
    std::vector<int> missing;  // vertices not originally adjacent to v0
};

// Adds the edges {v, v0} needed to make every vertex adjacent to v0.
ConeMissing cone_missing(const Graph& g, int v0);

// Every simple cycle as a vertex list, once up to rotation and reflection.
// Each returned cycle starts at its smallest vertex, and its second entry is
// smaller than its last.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

}  // namespace chipfire

#endif
