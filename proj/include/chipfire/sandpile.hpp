#ifndef CHIPFIRE_SANDPILE_HPP
#define CHIPFIRE_SANDPILE_HPP

#include <set>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

// Configuration: chips on the nonsink vertices of a sink-designated graph,
// indexed by vertex id with the sink coordinate omitted (see cfg_index).
// Divisor: chips on all vertices of a sinkless graph.
using Config = std::vector<long long>;
using Divisor = std::vector<long long>;

// Position of nonsink vertex v within a Config for the given sink.
inline int cfg_index(int v, int sink) { return v < sink ? v : v - 1; }
// Inverse of cfg_index.
inline int cfg_vertex(int i, int sink) { return i < sink ? i : i + 1; }

enum class FiringPolicy { LowestIndexFirst, HighestIndexFirst };

struct StabilizeResult {
    Config config;
    std::vector<long long> firings;  // how many times each nonsink vertex fired
};

// c - reduced_laplacian * 1_X. X holds vertex ids (not config indices).
Config fire_set(const Graph& g, int sink, const Config& c, const std::vector<int>& fire);

// Repeatedly fires one unstable vertex until stable. The abelian property
// makes the result policy-independent; the policy is exposed so tests can
// check that.
StabilizeResult stabilize(const Graph& g, int sink, const Config& c,
                          FiringPolicy policy = FiringPolicy::LowestIndexFirst);

Config max_stable(const Graph& g, int sink);

bool is_stable(const Graph& g, int sink, const Config& c);

// No nonempty subset of the nonsink vertices fires legally: checked against
// all 2^n - 1 subsets, straight from the definition.
bool is_superstable(const Graph& g, int sink, const Config& c);

// Dhar's criterion: firing the sink into c and stabilizing returns c with
// every nonsink vertex having fired exactly once.
bool is_recurrent(const Graph& g, int sink, const Config& c);

// c_max - c; c is recurrent iff the result is superstable.
Config duality_pair(const Graph& g, int sink, const Config& c);

// All superstables, filtered from the stable box 0 <= c_i < deg(v_i),
// in lexicographic order.
std::set<Config> enumerate_superstables(const Graph& g, int sink);

// d is quasi-superstable iff d + 1_V is superstable on cone(g) w.r.t. the apex.
bool is_quasi_superstable(const Graph& g, const Divisor& d);

// Search box -1 <= d_v <= deg_cone(v) - 2, lexicographic order.
std::set<Divisor> enumerate_quasi_superstables(const Graph& g);

long long divisor_degree(const Divisor& d);

}  // namespace chipfire

#endif
