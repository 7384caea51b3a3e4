#ifndef CHIPFIRE_VERIFY_HPP
#define CHIPFIRE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipfire/graph.hpp"

namespace chipfire {

struct VerifyEntry {
    std::string name;
    bool pass;
    bool informational = false;  // reported but never fails the suite
    std::string info;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_pass() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    std::optional<int> sink;            // sink-mode checks; all vertices if unset
    unsigned long long seed = 20240801; // randomized sub-checks
    int bfs_orders = 10;
    size_t max_orientation_checks = 600000;  // sample beyond this many
    size_t max_orderings = 720;              // cap on |S_n| enumeration
};

// Runs every theorem identity of the pipeline on one graph and reports one
// entry per identity. See README for the list.
VerifyReport run_verification(const Graph& g, const VerifyOptions& opt = {});

}  // namespace chipfire

#endif
