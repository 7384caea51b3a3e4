#include "chipfire/burning.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace chipfire {

std::vector<int> BurnTrace::firing_order() const {
    std::vector<int> order;
    order.reserve(steps.size());
    for (const auto& s : steps) order.push_back(s.fired);
    return order;
}

bool DiagramReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.pass; });
}

BurnResult run_burning(const Graph& g, const Divisor& c, const VertexOrdering& sigma) {
    int n = g.n_vertices();
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("ordering length mismatch");
    {
        std::vector<char> seen(n, 0);
        for (int v : sigma) {
            if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
            seen[v] = 1;
        }
    }
    if (!is_quasi_superstable(g, c))
        throw std::invalid_argument("divisor is not quasi-superstable");

    std::vector<int> rank(n);  // priority position of each vertex under sigma
    for (int i = 0; i < n; ++i) rank[sigma[i]] = i;
    auto by_rank = [&](int a, int b) { return rank[a] < rank[b]; };

    // b = c_max - c on the cone; vertex v is unstable when b_v >= deg(v) + 1.
    std::vector<long long> b(n);
    for (int v = 0; v < n; ++v) b[v] = g.degree(v) - c[v];
    auto unstable = [&](int v) { return b[v] >= g.degree(v) + 1; };

    BurnResult res;
    res.orientation = PartialOrientation(g.n_edges());
    res.intervals.assign(n, Interval{Rat(0)});
    std::vector<char> has_interval(n, 0), fired(n, 0), edge_done(g.n_edges(), 0);

    std::deque<int> queue;
    for (int v : sigma)
        if (unstable(v)) queue.push_back(v);
    {
        long long k = static_cast<long long>(queue.size());
        long long i = 1;
        for (int v : queue) {
            res.intervals[v] = Interval{Rat(i, k + 1)};
            has_interval[v] = 1;
            res.trace.initial_intervals.emplace_back(v, res.intervals[v]);
            ++i;
        }
        res.trace.initial_queue.assign(queue.begin(), queue.end());
    }

    while (!queue.empty()) {
        int w0 = queue.front();
        Rat alpha = res.intervals[w0].lo;
        Rat eps = queue.size() > 1 ? res.intervals[queue[1]].lo - alpha : Rat(1);

        BurnStep step;
        step.fired = w0;
        queue.pop_front();
        fired[w0] = 1;

        std::vector<char> was_unstable(n, 0);
        for (int v = 0; v < n; ++v) was_unstable[v] = unstable(v) ? 1 : 0;

        // fire w0 on the cone: one grain to each neighbor, one to the apex
        b[w0] -= g.degree(w0) + 1;
        for (int v : g.neighbors(w0)) b[v] += 1;

        std::vector<int> fresh;
        for (int v : g.neighbors(w0))
            if (!fired[v] && !was_unstable[v] && unstable(v)) fresh.push_back(v);
        std::sort(fresh.begin(), fresh.end(), by_rank);
        long long t = static_cast<long long>(fresh.size());
        for (long long i = 1; i <= t; ++i) {
            int z = fresh[i - 1];
            res.intervals[z] = Interval{alpha + 1 + Rat(i) * eps / (t + 1)};
            has_interval[z] = 1;
            step.new_intervals.emplace_back(z, res.intervals[z]);
            queue.push_back(z);
        }

        for (int v : g.neighbors(w0)) {
            int e = g.edge_index(w0, v);
            if (edge_done[e]) continue;
            edge_done[e] = 1;
            if (was_unstable[v]) {
                step.edge_decisions.emplace_back(e, EdgeState::Blank);
            } else {
                res.orientation.states[e] =
                    w0 < v ? EdgeState::Forward : EdgeState::Backward;
                step.edge_decisions.emplace_back(e, res.orientation.states[e]);
            }
        }

        step.queue_after.assign(queue.begin(), queue.end());
        res.trace.steps.push_back(std::move(step));
    }

    for (int v = 0; v < n; ++v)
        if (!fired[v] || !has_interval[v])
            throw std::logic_error("burning run failed to fire every vertex");

    res.semiorder = Semiorder(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && res.intervals[i].lo + 1 < res.intervals[j].lo)
                res.semiorder.less[i][j] = true;
    return res;
}

PartialOrientation eta_section(const Graph& g, const Divisor& c, const VertexOrdering& sigma) {
    return run_burning(g, c, sigma).orientation;
}

Semiorder phi_section(const Graph& g, const Divisor& c, const VertexOrdering& sigma) {
    return run_burning(g, c, sigma).semiorder;
}

std::vector<VertexOrdering> all_orderings(int n, size_t cap) {
    std::vector<VertexOrdering> out;
    VertexOrdering perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        out.push_back(perm);
        if (cap && out.size() >= cap) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

DiagramReport verify_diagram(const Graph& g, size_t max_orderings) {
    DiagramReport rep;
    auto quasis = enumerate_quasi_superstables(g);
    auto orderings = all_orderings(g.n_vertices(), max_orderings);
    auto semiorientations = enumerate_semiorientations(g);
    rep.semiorientation_count = semiorientations.size();

    bool theta_phi = true, nu_phi = true, psi_nu = true;
    std::set<PartialOrientation> eta_image;
    std::set<Divisor> phi_theta_image;
    for (const Divisor& c : quasis) {
        for (const auto& sigma : orderings) {
            BurnResult r = run_burning(g, c, sigma);
            if (theta(g, r.semiorder) != c) theta_phi = false;
            if (!(nu(g, r.semiorder) == r.orientation)) nu_phi = false;
            eta_image.insert(r.orientation);
        }
    }
    rep.eta_image_size = eta_image.size();
    rep.checks.push_back({"theta_after_phi_is_projection", theta_phi, ""});
    rep.checks.push_back({"nu_after_phi_equals_eta", nu_phi, ""});

    std::set<Divisor> psi_image, theta_image;
    std::set<PartialOrientation> nu_image;
    for (const auto& o : semiorientations) psi_image.insert(psi(g, o));
    for (const Semiorder& p : all_semiorders(g.n_vertices())) {
        PartialOrientation o = nu(g, p);
        nu_image.insert(o);
        Divisor th = theta(g, p);
        theta_image.insert(th);
        if (th != psi(g, o)) psi_nu = false;
    }
    rep.checks.push_back({"psi_after_nu_equals_theta", psi_nu, ""});
    auto set_eq = [](const auto& a, const auto& b) {
        return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
    };
    std::set<PartialOrientation> all_o(semiorientations.begin(), semiorientations.end());
    rep.checks.push_back({"psi_surjective_onto_quasi_superstables", set_eq(psi_image, quasis), ""});
    rep.checks.push_back({"theta_surjective_onto_quasi_superstables", set_eq(theta_image, quasis), ""});
    rep.checks.push_back({"nu_surjective_onto_semiorientations", set_eq(nu_image, all_o), ""});
    return rep;
}

}  // namespace chipfire
