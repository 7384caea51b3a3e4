#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chipfire/arrangement.hpp"
#include "chipfire/burning.hpp"
#include "chipfire/intmatrix.hpp"
#include "chipfire/json_io.hpp"
#include "chipfire/semiorder.hpp"
#include "support/small_graphs.hpp"

using namespace chipfire;
namespace ts = chipfire::testsupport;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph fig3() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("rho and tau") {
    Graph t = triangle();
    PartialOrientation blank(3);
    CHECK(tau(rho(t, blank)) == blank);
    CHECK_THROWS_AS(rho(t, orientation_from_arrows(t, {{0, 1}, {1, 2}})), std::invalid_argument);
    for (const auto& o : enumerate_semiorientations(t)) CHECK(tau(rho(t, o)) == o);
}

TEST_CASE("realize_region") {
    Graph t = triangle();
    auto origin = realize_region(t, PartialOrientation(3));
    CHECK(origin == std::vector<Rat>(3, Rat(0)));

    Graph h = house();
    auto o = orientation_from_arrows(h, {{0, 1}, {0, 4}, {1, 2}, {4, 3}});
    auto pt = realize_region(h, o);
    CHECK(nu(h, semiorder_from_point(pt)) == o);
    // the pinned hand point lies in the same region
    std::vector<Rat> pinned_pt{0, Rat(3, 2), Rat(11, 4), Rat(7, 2), 2};
    CHECK(nu(h, semiorder_from_point(pinned_pt)) == o);

    for (const Graph& g : ts::connected_graphs_up_to(5)) {
        for (const auto& so : enumerate_semiorientations(g)) {
            auto p = realize_region(g, so);
            CHECK(nu(g, semiorder_from_point(p)) == so);
        }
    }

    CHECK_THROWS_AS(realize_region(t, orientation_from_arrows(t, {{0, 1}, {1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("pak_stanley_labels") {
    Graph t = triangle();
    LabelMap labels = pak_stanley_labels(t);
    CHECK(labels.size() == 19);
    CHECK(labels.at(PartialOrientation(3)) == Divisor{-1, -1, -1});

    // single arrow (v2,v3): label gains 1 at the head
    auto one = orientation_from_arrows(t, {{1, 2}});
    CHECK(labels.at(one) == Divisor{-1, -1, 0});

    Graph f = fig3();
    LabelMap fl = pak_stanley_labels(f);
    CHECK(fl.size() == 109);
    std::set<Divisor> distinct;
    for (const auto& [o, lbl] : fl) distinct.insert(lbl);
    CHECK(distinct == enumerate_quasi_superstables(f));

    // bordering regions of the central polytope carry label (-1,0,-1,-1)
    CHECK(fl.at(orientation_from_arrows(f, {{2, 1}})) == Divisor{-1, 0, -1, -1});
    CHECK(fl.at(orientation_from_arrows(f, {{3, 1}})) == Divisor{-1, 0, -1, -1});
}

TEST_CASE("labels equal psi of the region orientation, any BFS order") {
    std::mt19937_64 rng(4242);
    for (const Graph& g : ts::connected_graphs_up_to(5)) {
        LabelMap base = pak_stanley_labels(g);
        CHECK(base.size() == enumerate_semiorientations(g).size());
        for (const auto& [o, lbl] : base) CHECK(lbl == psi(g, o));
        for (int k = 0; k < 10; ++k) CHECK(pak_stanley_labels(g, rng()) == base);
    }
}

TEST_CASE("sink arrangement labels") {
    Graph f = fig3();
    LabelMap labels = sink_arrangement_labels(f, 0);
    CHECK(labels.size() == 19);

    // central region: 0 at neighbors of the sink, -1 elsewhere
    auto central = orientation_from_arrows(f, {{0, 1}, {0, 2}});
    CHECK(labels.at(central) == Divisor{-1, 0, 0, -1});

    // crossing x3 > x2 + 1 from the center increments v3
    auto above = orientation_from_arrows(f, {{0, 1}, {0, 2}, {2, 3}});
    CHECK(labels.at(above) == Divisor{-1, 0, 0, 0});

    // admissible sub-map: the parking-function multiset with one repeat
    std::vector<Divisor> admissible_labels;
    for (const auto& [o, lbl] : labels)
        if (is_admissible(f, o, 0)) admissible_labels.push_back(lbl);
    CHECK(admissible_labels.size() == 9);
    std::map<Divisor, int> mult;
    for (const auto& d : admissible_labels) mult[d] += 1;
    CHECK(mult.size() == 8);
    CHECK(mult.at(Divisor{-1, 0, 0, 0}) == 2);

    // sink labels agree with the full labeling restricted to O_0
    for (const Graph& g : ts::connected_graphs_up_to(5)) {
        LabelMap full = pak_stanley_labels(g);
        for (int v0 = 0; v0 < g.n_vertices(); ++v0) {
            LabelMap sink = sink_arrangement_labels(g, v0);
            CHECK(sink.size() == enumerate_sink_semiorientations(g, v0).size());
            for (const auto& [o, lbl] : sink) {
                CHECK(full.at(o) == lbl);
                CHECK(lbl == psi(g, o));
            }
        }
    }
}

TEST_CASE("parking functions, three routes") {
    Graph f = fig3();
    auto park = extract_parking_functions(f, 0);
    std::set<Divisor> expected;
    for (Config c : std::vector<Config>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                        {2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}}) {
        Divisor d{-1, c[0], c[1], c[2]};
        expected.insert(d);
    }
    CHECK(park == expected);

    // tree: single parking function, -1 at the sink and 0 elsewhere
    Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
    auto tp = extract_parking_functions(tree, 0);
    CHECK(tp == std::set<Divisor>{{-1, 0, 0, 0}});

    for (const Graph& g : ts::connected_graphs_up_to(5)) {
        for (int v0 = 0; v0 < g.n_vertices(); ++v0) {
            auto p = extract_parking_functions(g, v0);
            CHECK(Int(static_cast<long long>(p.size())) == spanning_tree_count(g));
        }
    }
}

TEST_CASE("sink-source image via the filled-in sink graph") {
    // psi over the v0-source semiorientations = superstables of the graph
    // with v0 joined to everyone, shifted down on the added-edge vertices
    for (const Graph& g : ts::connected_graphs_up_to(4)) {
        for (int v0 = 0; v0 < g.n_vertices(); ++v0) {
            auto cm = cone_missing(g, v0);
            std::set<Divisor> via_k0;
            for (const Config& s : enumerate_superstables(cm.graph, v0)) {
                Divisor d(g.n_vertices());
                d[v0] = -1;
                for (int v = 0; v < g.n_vertices(); ++v)
                    if (v != v0) d[v] = s[cfg_index(v, v0)];
                for (int v : cm.missing) d[v] -= 1;
                via_k0.insert(d);
            }
            std::set<Divisor> via_psi;
            for (const auto& o : enumerate_sink_semiorientations(g, v0))
                via_psi.insert(psi(g, o));
            CHECK(via_k0 == via_psi);
        }
    }
}

TEST_CASE("maximal superstables") {
    Graph f = fig3();
    auto rep = maximal_superstable_check(f, 0);
    CHECK(rep.all_pass());
    CHECK(rep.n_maximal == 4);

    std::set<Config> maximal_expected{{2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
    std::set<Config> maximal_found;
    auto ss = enumerate_superstables(f, 0);
    for (const Config& c : ss) {
        bool is_max = true;
        for (const Config& d : ss) {
            if (d == c) continue;
            bool leq = true;
            for (size_t i = 0; i < c.size(); ++i)
                if (c[i] > d[i]) leq = false;
            if (leq) is_max = false;
        }
        if (is_max) {
            maximal_found.insert(c);
            CHECK(divisor_degree(c) == genus(f));
        }
    }
    CHECK(maximal_found == maximal_expected);

    Graph tree(3, {{0, 1}, {1, 2}});
    auto tr = maximal_superstable_check(tree, 0);
    CHECK(tr.all_pass());
    CHECK(tr.n_maximal == 1);

    for (const Graph& g : ts::connected_graphs_up_to(5))
        for (int v0 = 0; v0 < g.n_vertices(); ++v0)
            CHECK(maximal_superstable_check(g, v0).all_pass());
}

TEST_CASE("plot coordinates for three nonsink vertices") {
    Graph f = fig3();
    auto coords = region_plot_coordinates(f, 0);
    CHECK(coords.size() == 19);
    // distinct regions land on distinct points
    std::set<std::pair<double, double>> pts;
    for (const auto& [o, xy] : coords) pts.insert(xy);
    CHECK(pts.size() == 19);
    CHECK_THROWS_AS(region_plot_coordinates(house(), 0), std::invalid_argument);
}

TEST_CASE("dot export") {
    Graph t = triangle();
    std::string dot = labels_to_dot(t, pak_stanley_labels(t));
    CHECK(dot.find("graph regions {") == 0);
    CHECK(dot.find("r18") != std::string::npos);  // 19 nodes
    CHECK(dot.find("--") != std::string::npos);
}
