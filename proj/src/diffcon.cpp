#include "chipfire/diffcon.hpp"

#include <stdexcept>

namespace chipfire {

namespace {

struct ScaledArc {
    int from, to;
    Int weight;
};

// Bellman-Ford from a virtual source connected to every node with weight 0.
// Returns distances, or nullopt if a negative cycle exists.
template <typename T>
std::optional<std::vector<T>> shortest_potentials(int n, const std::vector<ScaledArc>& arcs) {
    std::vector<T> dist(n, T(0));
    std::vector<T> w;
    w.reserve(arcs.size());
    for (const auto& a : arcs) w.push_back(static_cast<T>(a.weight));
    for (int round = 0; round < n; ++round) {
        bool relaxed = false;
        for (size_t k = 0; k < arcs.size(); ++k) {
            T cand = dist[arcs[k].from] + w[k];
            if (cand < dist[arcs[k].to]) {
                dist[arcs[k].to] = cand;
                relaxed = true;
            }
        }
        if (!relaxed) return dist;
    }
    for (size_t k = 0; k < arcs.size(); ++k)
        if (dist[arcs[k].from] + w[k] < dist[arcs[k].to]) return std::nullopt;
    return dist;
}

struct ScaledSystem {
    std::vector<ScaledArc> arcs;
    Int denom;  // common denominator D of the rational bounds
    Int scale;  // M = #arcs + 1
    bool small;// every |weight| fits comfortably in long long
};

ScaledSystem scale_system(int n, const std::vector<StrictDiffSystem::Constraint>& cons) {
    ScaledSystem s;
    s.denom = 1;
    for (const auto& c : cons) s.denom = lcm(s.denom, denominator(c.bound));
    s.scale = Int(cons.size()) + 1;
    s.small = true;
    const Int limit = Int(1) << 50;
    for (const auto& c : cons) {
        Int b = numerator(c.bound) * (s.denom / denominator(c.bound));
        Int w = s.scale * b - 1;
        // constraint x_i - x_j < bound  =>  arc j -> i
        s.arcs.push_back({c.j, c.i, w});
        if (abs(w) * (n + 1) > limit) s.small = false;
    }
    return s;
}

}  // namespace

void StrictDiffSystem::add_less(int i, int j, const Rat& bound) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw std::invalid_argument("bad constraint indices");
    cons_.push_back({i, j, bound});
}

bool StrictDiffSystem::feasible() const {
    ScaledSystem s = scale_system(n_, cons_);
    if (s.small) return shortest_potentials<long long>(n_, s.arcs).has_value();
    return shortest_potentials<Int>(n_, s.arcs).has_value();
}

std::optional<std::vector<Rat>> StrictDiffSystem::solve() const {
    ScaledSystem s = scale_system(n_, cons_);
    auto dist = shortest_potentials<Int>(n_, s.arcs);
    if (!dist) return std::nullopt;
    std::vector<Rat> x(n_);
    Int unit = s.scale * s.denom;
    for (int v = 0; v < n_; ++v) x[v] = Rat((*dist)[v], unit);
    return x;
}

bool StrictDiffSystem::feasible_with_equality(int i, int j, const Rat& value) const {
    // Substitute x_j = x_i - value and test the remaining strict system.
    StrictDiffSystem reduced(n_);
    for (const auto& c : cons_) {
        int a = c.i, b = c.j;
        Rat bound = c.bound;
        if (a == j) {
            a = i;
            bound += value;
        }
        if (b == j) {
            b = i;
            bound -= value;
        }
        if (a == b) {
            if (bound <= 0) return false;  // constraint collapsed to 0 < bound
            continue;
        }
        reduced.add_less(a, b, bound);
    }
    return reduced.feasible();
}

}  // namespace chipfire
