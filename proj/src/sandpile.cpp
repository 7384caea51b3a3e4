#include "chipfire/sandpile.hpp"

#include <numeric>
#include <stdexcept>

namespace chipfire {

namespace {

void check_config(const Graph& g, int sink, const Config& c) {
    if (sink < 0 || sink >= g.n_vertices()) throw std::invalid_argument("sink out of range");
    if (static_cast<int>(c.size()) != g.n_vertices() - 1)
        throw std::invalid_argument("configuration length mismatch");
}

}  // namespace

Config fire_set(const Graph& g, int sink, const Config& c, const std::vector<int>& fire) {
    check_config(g, sink, c);
    std::vector<char> firing(g.n_vertices(), 0);
    for (int v : fire) {
        if (v < 0 || v >= g.n_vertices() || v == sink)
            throw std::invalid_argument("fire set contains sink or out-of-range vertex");
        firing[v] = 1;
    }
    Config out = c;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (!firing[v]) continue;
        out[cfg_index(v, sink)] -= g.degree(v);
        for (int w : g.neighbors(v))
            if (w != sink) out[cfg_index(w, sink)] += 1;
    }
    return out;
}

StabilizeResult stabilize(const Graph& g, int sink, const Config& c, FiringPolicy policy) {
    check_config(g, sink, c);
    for (long long x : c)
        if (x < 0) throw std::invalid_argument("stabilize requires a nonnegative configuration");
    StabilizeResult r{c, std::vector<long long>(c.size(), 0)};
    bool fired = true;
    while (fired) {
        fired = false;
        int n = g.n_vertices();
        for (int step = 0; step < n; ++step) {
            int v = policy == FiringPolicy::LowestIndexFirst ? step : n - 1 - step;
            if (v == sink) continue;
            int i = cfg_index(v, sink);
            if (r.config[i] >= g.degree(v)) {
                r.config[i] -= g.degree(v);
                for (int w : g.neighbors(v))
                    if (w != sink) r.config[cfg_index(w, sink)] += 1;
                r.firings[i] += 1;
                fired = true;
                break;  // one vertex at a time, re-scan by policy
            }
        }
    }
    return r;
}

Config max_stable(const Graph& g, int sink) {
    Config c(g.n_vertices() - 1);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (v != sink) c[cfg_index(v, sink)] = g.degree(v) - 1;
    return c;
}

bool is_stable(const Graph& g, int sink, const Config& c) {
    check_config(g, sink, c);
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (v == sink) continue;
        long long x = c[cfg_index(v, sink)];
        if (x < 0 || x >= g.degree(v)) return false;
    }
    return true;
}

bool is_superstable(const Graph& g, int sink, const Config& c) {
    check_config(g, sink, c);
    for (long long x : c)
        if (x < 0) return false;
    int n = g.n_vertices() - 1;
    // For X a set of nonsink vertices, firing X is legal iff every v in X
    // keeps c_v - (edges from v leaving X) >= 0.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool legal = true;
        for (int i = 0; i < n && legal; ++i) {
            if (!(mask & (1u << i))) continue;
            int v = cfg_vertex(i, sink);
            long long out_edges = 0;
            for (int w : g.neighbors(v))
                if (w == sink || !(mask & (1u << cfg_index(w, sink)))) ++out_edges;
            if (c[i] - out_edges < 0) legal = false;
        }
        if (legal) return false;
    }
    return true;
}

bool is_recurrent(const Graph& g, int sink, const Config& c) {
    check_config(g, sink, c);
    if (!is_stable(g, sink, c)) return false;
    Config b = c;
    for (int w : g.neighbors(sink)) b[cfg_index(w, sink)] += 1;
    StabilizeResult r = stabilize(g, sink, b);
    if (r.config != c) return false;
    for (long long f : r.firings)
        if (f != 1) return false;
    return true;
}

Config duality_pair(const Graph& g, int sink, const Config& c) {
    check_config(g, sink, c);
    Config m = max_stable(g, sink);
    for (size_t i = 0; i < m.size(); ++i) m[i] -= c[i];
    return m;
}

std::set<Config> enumerate_superstables(const Graph& g, int sink) {
    if (sink < 0 || sink >= g.n_vertices()) throw std::invalid_argument("sink out of range");
    std::set<Config> out;
    int n = g.n_vertices() - 1;
    Config c(n, 0);
    while (true) {
        if (is_superstable(g, sink, c)) out.insert(c);
        int i = n - 1;
        while (i >= 0 && c[i] == g.degree(cfg_vertex(i, sink)) - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

bool is_quasi_superstable(const Graph& g, const Divisor& d) {
    if (static_cast<int>(d.size()) != g.n_vertices())
        throw std::invalid_argument("divisor length mismatch");
    Graph k = cone(g);
    Config c = d;
    for (auto& x : c) x += 1;
    return is_superstable(k, k.n_vertices() - 1, c);
}

std::set<Divisor> enumerate_quasi_superstables(const Graph& g) {
    std::set<Divisor> out;
    int n = g.n_vertices();
    Divisor d(n, -1);
    while (true) {
        if (is_quasi_superstable(g, d)) out.insert(d);
        int i = n - 1;
        while (i >= 0 && d[i] == g.degree(i) - 1) d[i--] = -1;  // deg_cone - 2 = deg_g - 1
        if (i < 0) break;
        ++d[i];
    }
    return out;
}

long long divisor_degree(const Divisor& d) {
    return std::accumulate(d.begin(), d.end(), 0LL);
}

}  // namespace chipfire
