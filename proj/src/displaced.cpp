#include "chipfire/displaced.hpp"

#include <deque>
#include <stdexcept>

#include "chipfire/diffcon.hpp"

namespace chipfire {

DisplacementMatrix::DisplacementMatrix(const Graph& g, std::map<std::pair<int, int>, Rat> entries)
    : g_(g), entries_(std::move(entries)) {
    for (auto [u, v] : g_.edges()) {
        auto f = entries_.find({u, v});
        auto b = entries_.find({v, u});
        if (f == entries_.end() || b == entries_.end())
            throw std::invalid_argument("displacement matrix misses an adjacent pair");
        if (f->second + b->second == 0)
            throw std::invalid_argument("degenerate displacement: A_ij + A_ji == 0");
    }
    for (const auto& [key, val] : entries_)
        if (!g_.has_edge(key.first, key.second))
            throw std::invalid_argument("displacement entry on a non-edge");
}

DisplacementMatrix DisplacementMatrix::all_ones(const Graph& g) {
    std::map<std::pair<int, int>, Rat> e;
    for (auto [u, v] : g.edges()) {
        e[{u, v}] = 1;
        e[{v, u}] = 1;
    }
    return DisplacementMatrix(g, std::move(e));
}

const Rat& DisplacementMatrix::at(int i, int j) const {
    auto it = entries_.find({i, j});
    if (it == entries_.end()) throw std::invalid_argument("no displacement entry for that pair");
    return it->second;
}

std::vector<Hyperplane> hyperplanes_of(const DisplacementMatrix& a) {
    std::vector<Hyperplane> hp;
    for (auto [u, v] : a.graph().edges()) {
        hp.push_back({u, v, a.at(u, v)});
        hp.push_back({v, u, a.at(v, u)});
    }
    return hp;
}

std::string side_vector_string(const SideVector& s) {
    std::string out;
    out.reserve(s.size());
    for (Side x : s) out += x == Side::Less ? '<' : '>';
    return out;
}

namespace {

StrictDiffSystem side_system(const DisplacementMatrix& a, const std::vector<Hyperplane>& hp,
                             const SideVector& s, size_t upto) {
    StrictDiffSystem sys(a.graph().n_vertices());
    for (size_t k = 0; k < upto; ++k) {
        const Hyperplane& h = hp[k];
        if (s[k] == Side::Less) sys.add_less(h.i, h.j, h.value);
        else sys.add_less(h.j, h.i, -h.value);
    }
    return sys;
}

}  // namespace

bool ha_region_feasible(const DisplacementMatrix& a, const SideVector& s) {
    auto hp = hyperplanes_of(a);
    if (s.size() != hp.size()) throw std::invalid_argument("side vector length mismatch");
    return side_system(a, hp, s, hp.size()).feasible();
}

bool ha_central_exists(const DisplacementMatrix& a) {
    return ha_region_feasible(a, SideVector(hyperplanes_of(a).size(), Side::Less));
}

std::vector<SideVector> ha_regions(const DisplacementMatrix& a) {
    auto hp = hyperplanes_of(a);
    std::vector<SideVector> out;
    SideVector s(hp.size(), Side::Less);
    // adding constraints never revives an infeasible prefix, so prune on it
    auto rec = [&](auto&& self, size_t k) -> void {
        if (!side_system(a, hp, s, k).feasible()) return;
        if (k == hp.size()) {
            out.push_back(s);
            return;
        }
        for (Side side : {Side::Less, Side::Greater}) {
            s[k] = side;
            self(self, k + 1);
        }
        s[k] = Side::Less;
    };
    rec(rec, 0);
    return out;
}

bool ha_adjacent(const DisplacementMatrix& a, const SideVector& r1, const SideVector& r2) {
    auto hp = hyperplanes_of(a);
    if (r1.size() != hp.size() || r2.size() != hp.size())
        throw std::invalid_argument("side vector length mismatch");
    int diff = -1;
    for (size_t k = 0; k < hp.size(); ++k) {
        if (r1[k] != r2[k]) {
            if (diff >= 0) return false;
            diff = static_cast<int>(k);
        }
    }
    if (diff < 0) return false;
    // shared facet: the common strict constraints plus the tight hyperplane
    StrictDiffSystem sys(a.graph().n_vertices());
    for (size_t k = 0; k < hp.size(); ++k) {
        if (static_cast<int>(k) == diff) continue;
        const Hyperplane& h = hp[k];
        if (r1[k] == Side::Less) sys.add_less(h.i, h.j, h.value);
        else sys.add_less(h.j, h.i, -h.value);
    }
    return sys.feasible_with_equality(hp[diff].i, hp[diff].j, hp[diff].value);
}

HaConjectureReport ha_label_and_test_conjecture(const DisplacementMatrix& a) {
    HaConjectureReport rep;
    rep.has_central = ha_central_exists(a);
    if (!rep.has_central) throw std::invalid_argument("arrangement has no central region");

    auto hp = hyperplanes_of(a);
    auto regions = ha_regions(a);
    rep.region_count = regions.size();

    std::map<SideVector, size_t> index;
    for (size_t i = 0; i < regions.size(); ++i) index[regions[i]] = i;

    // adjacency via single-side flips that keep a feasible shared facet
    std::vector<std::vector<std::pair<size_t, size_t>>> nbrs(regions.size());
    for (size_t i = 0; i < regions.size(); ++i) {
        for (size_t k = 0; k < hp.size(); ++k) {
            SideVector flipped = regions[i];
            flipped[k] = flipped[k] == Side::Less ? Side::Greater : Side::Less;
            auto it = index.find(flipped);
            if (it == index.end()) continue;
            if (ha_adjacent(a, regions[i], flipped)) nbrs[i].push_back({it->second, k});
        }
    }

    const Graph& g = a.graph();
    SideVector central(hp.size(), Side::Less);
    size_t start = index.at(central);
    std::vector<std::optional<Divisor>> label(regions.size());
    label[start] = Divisor(g.n_vertices(), -1);

    rep.path_consistent = true;
    std::deque<size_t> queue = {start};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (auto [next, k] : nbrs[cur]) {
            Divisor expect = *label[cur];
            // crossing x_i - x_j = A_ij toward the Greater side adds 1 at v_i
            expect[hp[k].i] += regions[next][k] == Side::Greater ? 1 : -1;
            if (!label[next]) {
                label[next] = expect;
                queue.push_back(next);
            } else if (*label[next] != expect) {
                rep.path_consistent = false;
                rep.conflicts.push_back("region " + side_vector_string(regions[next]) +
                                        " reached with conflicting labels");
            }
        }
    }

    std::set<Divisor> distinct;
    for (size_t i = 0; i < regions.size(); ++i) {
        if (!label[i]) {
            rep.path_consistent = false;
            rep.conflicts.push_back("region " + side_vector_string(regions[i]) +
                                    " unreachable from the central region");
            continue;
        }
        rep.labels[side_vector_string(regions[i])] = *label[i];
        distinct.insert(*label[i]);
    }
    rep.distinct_labels = distinct.size();
    auto quasis = enumerate_quasi_superstables(g);
    rep.quasi_superstable_count = quasis.size();
    rep.labels_equal_quasi_superstables = distinct == quasis;
    return rep;
}

}  // namespace chipfire
