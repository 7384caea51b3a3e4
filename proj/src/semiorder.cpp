#include "chipfire/semiorder.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "chipfire/diffcon.hpp"

namespace chipfire {

std::vector<std::pair<int, int>> Semiorder::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (less[i][j]) out.emplace_back(i, j);
    return out;
}

Semiorder Semiorder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Semiorder p(n);
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw std::invalid_argument("bad relation pair");
        p.less[i][j] = true;
    }
    return p;
}

Semiorder semiorder_from_point(const std::vector<Rat>& t) {
    int n = static_cast<int>(t.size());
    Semiorder p(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (t[i] + 1 == t[j])
                throw std::invalid_argument("point lies on a hyperplane (t_i + 1 == t_j)");
            p.less[i][j] = t[i] + 1 < t[j];
        }
    return p;
}

bool is_semiorder(const Semiorder& rel) {
    int n = rel.n;
    for (int i = 0; i < n; ++i)
        if (rel.less[i][i]) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!rel.less[i][j]) continue;
            if (rel.less[j][i]) return false;
            for (int k = 0; k < n; ++k)
                if (rel.less[j][k] && !rel.less[i][k]) return false;  // transitivity
        }
    auto incomp = [&](int a, int b) { return !rel.less[a][b] && !rel.less[b][a]; };
    // induced 2+2: a<b, c<d with the four cross pairs incomparable
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!rel.less[a][b]) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!rel.less[c][d] || c == a || c == b || d == a || d == b) continue;
                    if (incomp(a, c) && incomp(a, d) && incomp(b, c) && incomp(b, d)) return false;
                }
        }
    // induced 3+1: a<b<c with x incomparable to all three
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!rel.less[a][b]) continue;
            for (int c = 0; c < n; ++c) {
                if (!rel.less[b][c]) continue;
                for (int x = 0; x < n; ++x) {
                    if (x == a || x == b || x == c) continue;
                    if (incomp(x, a) && incomp(x, b) && incomp(x, c)) return false;
                }
            }
        }
    return true;
}

std::optional<std::vector<Rat>> try_realize_semiorder(const Semiorder& rel) {
    int n = rel.n;
    for (int i = 0; i < n; ++i)
        if (rel.less[i][i]) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel.less[i][j] && rel.less[j][i]) return std::nullopt;
    StrictDiffSystem sys(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rel.less[i][j]) sys.add_less(i, j, -1);
            else if (rel.less[j][i]) sys.add_less(j, i, -1);
            else {
                sys.add_less(i, j, 1);
                sys.add_less(j, i, 1);
            }
        }
    auto t = sys.solve();
    if (!t) return std::nullopt;
    // The solved point induces some semiorder; it equals rel exactly when rel
    // was a semiorder to begin with (strict constraints leave no ties).
    if (!(semiorder_from_point(*t) == rel)) return std::nullopt;
    return t;
}

std::vector<Rat> realize_semiorder(const Semiorder& rel) {
    auto t = try_realize_semiorder(rel);
    if (!t) throw std::invalid_argument("relation is not a semiorder");
    return *t;
}

PartialOrientation nu(const Graph& g, const Semiorder& p) {
    if (p.n != g.n_vertices()) throw std::invalid_argument("semiorder size mismatch");
    PartialOrientation o(g.n_edges());
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        if (p.less[u][v]) o.states[e] = EdgeState::Forward;
        else if (p.less[v][u]) o.states[e] = EdgeState::Backward;
    }
    return o;
}

Divisor theta(const Graph& g, const Semiorder& p) {
    if (p.n != g.n_vertices()) throw std::invalid_argument("semiorder size mismatch");
    Divisor d(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v) {
        long long below = 0;
        for (int u : g.neighbors(v))
            if (p.less[u][v]) ++below;
        d[v] = below - 1;
    }
    return d;
}

namespace {

// Backtracking enumeration over the C(k,2) unordered pairs, three states per
// pair. A violating triple or 4-set is caught exactly when its last pair gets
// assigned, so each prefix that survives is extendable-consistent and the
// leaves are exactly the semiorders.
struct SemiorderEnum {
    int k;
    Semiorder cur;
    std::vector<Semiorder>* out;

    explicit SemiorderEnum(int k_, std::vector<Semiorder>* out_) : k(k_), cur(k_), out(out_) {}

    // position of pair {a,b} in lexicographic order; pairs are assigned in
    // exactly that order
    int pos(int a, int b) const {
        if (a > b) std::swap(a, b);
        return a * (2 * k - a - 1) / 2 + (b - a - 1);
    }

    bool incomp(int a, int b) const { return !cur.less[a][b] && !cur.less[b][a]; }

    bool quad_ok(int a, int b, int c, int d) const {
        int v[4] = {a, b, c, d};
        // induced 2+2
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                if (x == y || !cur.less[v[x]][v[y]]) continue;
                int z = -1, w = -1;
                for (int t = 0; t < 4; ++t)
                    if (t != x && t != y) (z < 0 ? z : w) = t;
                if ((cur.less[v[z]][v[w]] || cur.less[v[w]][v[z]]) && incomp(v[x], v[z]) &&
                    incomp(v[x], v[w]) && incomp(v[y], v[z]) && incomp(v[y], v[w]))
                    return false;
            }
        // induced 3+1
        for (int x = 0; x < 4; ++x) {
            int u[3], m = 0;
            for (int t = 0; t < 4; ++t)
                if (t != x) u[m++] = t;
            if (!incomp(v[x], v[u[0]]) || !incomp(v[x], v[u[1]]) || !incomp(v[x], v[u[2]]))
                continue;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    for (int r = 0; r < 3; ++r) {
                        if (p == q || q == r || p == r) continue;
                        if (cur.less[v[u[p]]][v[u[q]]] && cur.less[v[u[q]]][v[u[r]]]) return false;
                    }
        }
        return true;
    }

    bool fresh_pair_ok(int idx, int i, int j) const {
        for (int c = 0; c < k; ++c) {
            if (c == i || c == j) continue;
            if (pos(i, c) > idx || pos(j, c) > idx) continue;
            int v[3] = {i, j, c};
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    for (int z = 0; z < 3; ++z) {
                        if (x == y || y == z || x == z) continue;
                        if (cur.less[v[x]][v[y]] && cur.less[v[y]][v[z]] && !cur.less[v[x]][v[z]])
                            return false;
                    }
        }
        for (int c = 0; c < k; ++c) {
            if (c == i || c == j) continue;
            for (int d = c + 1; d < k; ++d) {
                if (d == i || d == j) continue;
                if (pos(i, c) > idx || pos(i, d) > idx || pos(j, c) > idx || pos(j, d) > idx ||
                    pos(c, d) > idx)
                    continue;
                if (!quad_ok(i, j, c, d)) return false;
            }
        }
        return true;
    }

    void run(int idx) {
        if (idx == k * (k - 1) / 2) {
            out->push_back(cur);
            return;
        }
        // invert idx -> pair (i, j)
        int i = 0;
        int skip = idx;
        while (skip >= k - 1 - i) skip -= k - 1 - i, ++i;
        int j = i + 1 + skip;
        for (int state = 0; state < 3; ++state) {
            cur.less[i][j] = state == 1;
            cur.less[j][i] = state == 2;
            if (fresh_pair_ok(idx, i, j)) run(idx + 1);
        }
        cur.less[i][j] = cur.less[j][i] = false;
    }
};

}  // namespace

const std::vector<Semiorder>& all_semiorders(int k) {
    if (k < 0 || k > 7) throw std::invalid_argument("semiorder enumeration capped at 7 elements");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<const std::vector<Semiorder>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) {
        auto result = std::make_unique<std::vector<Semiorder>>();
        SemiorderEnum en(k, result.get());
        en.run(0);
        std::sort(result->begin(), result->end());
        it = cache.emplace(k, std::move(result)).first;
    }
    return *it->second;
}

std::vector<Semiorder> compatible_semiorders(const Graph& g, const PartialOrientation& o) {
    if (!is_semiorientation_feasible(g, o))
        throw std::invalid_argument("not a valid semiorientation");
    std::vector<Semiorder> out;
    for (const Semiorder& p : all_semiorders(g.n_vertices()))
        if (nu(g, p) == o) out.push_back(p);
    return out;
}

}  // namespace chipfire
