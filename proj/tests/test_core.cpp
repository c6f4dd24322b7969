#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpmwc/graph.hpp"
#include "lpmwc/instances.hpp"
#include "test_util.hpp"

using namespace lpmwc;
using testutil::Rng;

TEST_CASE("cut_weight on the unit star") {
    Instance star = gen_star(3).instance;
    const int center = 3;
    CHECK(cut_weight(star.graph, VertexSet::of(4, {0})) == doctest::Approx(1.0));
    CHECK(cut_weight(star.graph, VertexSet(4)) == 0.0);
    CHECK(cut_weight(star.graph, VertexSet::of(4, {center})) == doctest::Approx(3.0));
}

TEST_CASE("cut symmetry, submodularity, posimodularity on random graphs") {
    Rng rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 3 + rng.below(10);
        Graph g = testutil::random_graph(rng, n, 0.5);
        VertexSet a = testutil::random_subset(rng, n);
        VertexSet b = testutil::random_subset(rng, n);

        double fa = cut_weight(g, a);
        double fb = cut_weight(g, b);
        VertexSet complement = VertexSet::full(n).minus(a);
        CHECK(near(fa, cut_weight(g, complement)));

        double scale = std::max({1.0, fa, fb});
        CHECK(fa + fb >= cut_weight(g, a.intersect(b)) + cut_weight(g, a.unite(b)) - 1e-9 * scale);
        CHECK(fa + fb >= cut_weight(g, a.minus(b)) + cut_weight(g, b.minus(a)) - 1e-9 * scale);
    }
}

TEST_CASE("lp_objective examples") {
    Instance star = gen_star(4).instance;
    star.p = 2.0;
    MultiwayCut cut;
    cut.part = {0, 1, 2, 3, 0};  // center joins part 1
    CHECK(lp_objective(star, cut) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));

    star.p = 1.0;
    auto cuts = per_part_cuts(star, cut);
    double sum = 0.0;
    for (double c : cuts) sum += c;
    CHECK(lp_objective(star, cut) == doctest::Approx(sum).epsilon(1e-12));

    Instance inf = star;
    inf.p = kInfiniteP;
    const double values[3] = {5.0, 2.0, 2.0};
    CHECK(lp_norm(values, kInfiniteP) == 5.0);
}

TEST_CASE("lp_objective is non-increasing in p and tends to the max") {
    Rng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 4 + rng.below(8);
        int k = 2 + rng.below(3);
        Instance inst = testutil::random_instance(rng, n, k, 1.0);
        MultiwayCut cut = testutil::random_cut(rng, inst);
        double previous = std::numeric_limits<double>::infinity();
        for (double p : {1.0, 1.5, 2.0, 3.0, 8.0, 64.0}) {
            inst.p = p;
            double value = lp_objective(inst, cut);
            CHECK(value <= previous * (1.0 + 1e-12));
            previous = value;
        }
        inst.p = kInfiniteP;
        double max_value = lp_objective(inst, cut);
        CHECK(max_value <= previous * (1.0 + 1e-12));
        inst.p = 64.0;
        CHECK(lp_objective(inst, cut) <= max_value * std::pow(double(k), 1.0 / 64.0) * (1.0 + 1e-12));
    }
}

TEST_CASE("k=2 objective is 2^(1/p) times the single cut value") {
    Rng rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        Instance inst = testutil::random_instance(rng, 4 + rng.below(6), 2, 1.0 + 2.0 * rng.unit());
        MultiwayCut cut = testutil::random_cut(rng, inst);
        double c = cut_weight(inst.graph, cut.part_set(inst, 0));
        CHECK(near(lp_objective(inst, cut), std::pow(2.0, 1.0 / inst.p) * c));
    }
}

TEST_CASE("part_connectivity") {
    Instance fig = gen_fig1(2.0).instance;
    MultiwayCut cut;
    cut.part = {0, 0, 1, 2, 3, 4};  // u2 grouped with u1
    auto conn = part_connectivity(fig, cut);
    CHECK_FALSE(conn[0]);  // no u1-u2 edge
    for (int i = 1; i < 5; ++i) CHECK(conn[i]);

    // a full-vertex part of a connected graph is connected
    Graph path = path_graph(5);
    CHECK(induced_connected(path, VertexSet::full(5)));
    CHECK(induced_connected(path, VertexSet::of(5, {2})));
    CHECK_FALSE(induced_connected(path, VertexSet::of(5, {0, 2})));
}

TEST_CASE("zero-weight edges count for connectivity but not for cuts") {
    Graph g(3);
    g.add_edge(0, 1, 0.0);
    g.add_edge(1, 2, 2.0);
    CHECK(cut_weight(g, VertexSet::of(3, {0})) == 0.0);
    CHECK(induced_connected(g, VertexSet::of(3, {0, 1})));
}

TEST_CASE("graph invariants are enforced") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, -1.0), std::invalid_argument);

    // parallel edges sum under cut evaluation
    g.add_edge(0, 1, 1.5);
    g.add_edge(0, 1, 2.5);
    CHECK(cut_weight(g, VertexSet::of(3, {0})) == doctest::Approx(4.0));
}
