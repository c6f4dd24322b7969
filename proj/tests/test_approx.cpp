#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lpmwc/approx.hpp"
#include "lpmwc/errors.hpp"
#include "lpmwc/exact.hpp"
#include "lpmwc/flow.hpp"
#include "lpmwc/instances.hpp"
#include "test_util.hpp"

using namespace lpmwc;
using testutil::Rng;

TEST_CASE("mwu cover on the small star") {
    Instance star = gen_star(3).instance;
    star.p = 2.0;
    double opt = solve_exact(star).objective;
    double D = std::pow(opt, star.p);
    MwuResult result = mwu_cover(star, D, default_beta(star.n(), star.k()), UtcMode::exact);

    CHECK(result.certified);
    for (int v = 0; v < star.n(); ++v) CHECK(result.coverage[v] >= 2);  // log2(4)
    VertexSet covered(star.n());
    for (const auto& s : result.sets) {
        covered = covered.unite(s);
        int terms = 0;
        for (int t : star.terminals) terms += s.contains(t);
        CHECK(terms <= 1);
    }
    CHECK(covered == VertexSet::full(star.n()));
    CHECK(result.sets.size() <= std::size_t(64) * 3 * 2);
}

TEST_CASE("mwu cover structural guarantees on random instances") {
    Rng rng(101);
    for (int rep = 0; rep < 12; ++rep) {
        int n = 4 + rng.below(8);
        int k = 2 + rng.below(3);
        Instance inst = testutil::random_instance(rng, n, k, rep % 2 ? 2.0 : 1.5);
        double opt = solve_exact(inst).objective;
        double D = std::max(std::pow(opt, inst.p), 1e-6);
        MwuResult result = mwu_cover(inst, D, default_beta(n, k), UtcMode::exact);

        double log_n = std::log2(double(n));
        VertexSet covered(n);
        for (const auto& s : result.sets) covered = covered.unite(s);
        CHECK(covered == VertexSet::full(n));
        for (int v = 0; v < n; ++v) CHECK(double(result.coverage[v]) >= log_n - 1e-9);
        CHECK(result.iterations <= std::size_t(64) * k * std::size_t(std::ceil(log_n)));
    }
}

TEST_CASE("mwu falls back to the least-violating candidate under an impossible beta") {
    Instance star = gen_star(3).instance;
    star.p = 2.0;
    double D = std::pow(solve_exact(star).objective, 2.0);
    // beta too small for any UTC result to meet its threshold
    MwuResult result = mwu_cover(star, D, 1e-9, UtcMode::exact);
    CHECK_FALSE(result.certified);
    VertexSet covered(star.n());
    for (const auto& s : result.sets) {
        covered = covered.unite(s);
        int terms = 0;
        for (int t : star.terminals) terms += s.contains(t);
        CHECK(terms <= 1);
    }
    CHECK(covered == VertexSet::full(star.n()));
    for (int v = 0; v < star.n(); ++v) CHECK(result.coverage[v] >= 2);
}

TEST_CASE("uncross: duplicate sets collapse to one") {
    Graph g = path_graph(3);
    CutCollection sets = {VertexSet::full(3), VertexSet::full(3)};
    UncrossResult result = uncross(g, sets);
    REQUIRE(result.parts.size() == 1);
    CHECK(result.parts[0] == VertexSet::full(3));
}

TEST_CASE("aggregate rejects malformed partitions") {
    Instance star = gen_star(3).instance;
    // overlap
    CHECK_THROWS_AS(aggregate(star, {VertexSet::of(4, {0, 3}), VertexSet::of(4, {1, 3}), VertexSet::of(4, {2})}),
                    std::invalid_argument);
    // missing vertex
    CHECK_THROWS_AS(aggregate(star, {VertexSet::of(4, {0}), VertexSet::of(4, {1}), VertexSet::of(4, {2})}),
                    std::invalid_argument);
    // two terminals in one part
    CHECK_THROWS_AS(aggregate(star, {VertexSet::of(4, {0, 1}), VertexSet::of(4, {2}), VertexSet::of(4, {3})}),
                    std::invalid_argument);
}

TEST_CASE("uncross: path example") {
    Graph g = path_graph(3);
    CutCollection sets = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    UncrossResult result = uncross(g, sets);
    REQUIRE(result.parts.size() == 2);
    CHECK(result.parts[0] == VertexSet::of(3, {0}));
    CHECK(result.parts[1] == VertexSet::of(3, {1, 2}));
}

TEST_CASE("uncross: disjoint input is returned unchanged") {
    Graph g = path_graph(4);
    CutCollection sets = {VertexSet::of(4, {0}), VertexSet::of(4, {1, 2}), VertexSet::of(4, {3})};
    UncrossResult result = uncross(g, sets);
    CHECK(result.steps == 0);
    CHECK(result.parts == sets);
}

TEST_CASE("uncross: a subset is absorbed") {
    Graph g = path_graph(4);
    CutCollection sets = {VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 1, 2, 3})};
    UncrossResult result = uncross(g, sets);
    REQUIRE(result.parts.size() == 1);
    CHECK(result.parts[0] == VertexSet::full(4));
}

TEST_CASE("uncross requires the union to be V") {
    Graph g = path_graph(3);
    CutCollection sets = {VertexSet::of(3, {0, 1})};
    CHECK_THROWS_AS(uncross(g, sets), UnionNotV);
}

TEST_CASE("uncross invariants on random covering collections") {
    Rng rng(211);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 4 + rng.below(8);
        Graph g = testutil::random_graph(rng, n, 0.5);
        double p = 1.0 + 2.0 * rng.unit();

        CutCollection sets;
        VertexSet covered(n);
        int count = 2 + rng.below(5);
        for (int i = 0; i < count; ++i) {
            VertexSet s = testutil::random_subset(rng, n, 0.4);
            if (s.empty()) s.insert(rng.below(n));
            sets.push_back(s);
            covered = covered.unite(s);
        }
        VertexSet rest = VertexSet::full(n).minus(covered);
        if (!rest.empty()) sets.push_back(rest);

        auto sum_p = [&](const std::vector<VertexSet>& family) {
            double total = 0.0;
            for (const auto& s : family) total += std::pow(cut_weight(g, s), p);
            return total;
        };
        double previous = sum_p(sets);
        std::size_t observed = 0;
        UncrossResult result = uncross(g, sets, [&](const std::vector<VertexSet>& family) {
            double now = sum_p(family);
            CHECK(now <= previous + 1e-9 * std::max(1.0, previous));
            previous = now;
            VertexSet covered(n);  // the union stays V at every step
            for (const auto& s : family) covered = covered.unite(s);
            CHECK(covered == VertexSet::full(n));
            ++observed;
        });
        CHECK(observed == result.steps);

        // partition of V
        std::vector<int> owner(n, -1);
        for (std::size_t i = 0; i < result.parts.size(); ++i) {
            result.parts[i].for_each([&](int v) {
                CHECK(owner[v] == -1);
                owner[v] = int(i);
            });
        }
        for (int v = 0; v < n; ++v) CHECK(owner[v] != -1);
        // every part fits inside some input set
        for (const auto& part : result.parts) {
            bool inside = false;
            for (const auto& s : sets) inside = inside || part.is_subset_of(s);
            CHECK(inside);
        }
    }
}

TEST_CASE("aggregate: no free parts returns the terminal parts") {
    Instance star = gen_star(3).instance;
    star.p = 2.0;
    std::vector<VertexSet> parts = {VertexSet::of(4, {0, 3}), VertexSet::of(4, {1}), VertexSet::of(4, {2})};
    AggregateResult result = aggregate(star, parts);
    CHECK(result.bucket_cap == 0);
    CHECK(result.cut.part == std::vector<int>{0, 1, 2, 0});
}

TEST_CASE("aggregate: single leftover joins the lighter terminal part") {
    Graph g(4);
    g.add_edge(0, 2, 5.0);  // t1 side is heavy
    g.add_edge(1, 2, 1.0);
    g.add_edge(2, 3, 0.5);
    Instance inst;
    inst.graph = g;
    inst.terminals = {0, 1};
    inst.p = 2.0;
    std::vector<VertexSet> parts = {VertexSet::of(4, {0}), VertexSet::of(4, {1}), VertexSet::of(4, {2, 3})};
    AggregateResult result = aggregate(inst, parts);
    // cut({0}) = 5, cut({1}) = 1: the free part must join part 2
    CHECK(result.cut.part == std::vector<int>{0, 1, 1, 1});
    CHECK(result.bucket_cap == 1);
}

TEST_CASE("aggregate invariants and the Jensen bound") {
    Rng rng(307);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 5 + rng.below(8);
        int k = 2 + rng.below(3);
        double p = 1.0 + 2.5 * rng.unit();
        Instance inst = testutil::random_instance(rng, n, k, p);

        // random partition with every terminal alone plus free parts
        std::vector<VertexSet> parts(k, VertexSet(n));
        for (int i = 0; i < k; ++i) parts[i].insert(inst.terminals[i]);
        std::vector<int> free_vertices = inst.non_terminals();
        int extra_parts = 1 + rng.below(4);
        for (int i = 0; i < extra_parts; ++i) parts.emplace_back(n);
        for (int v : free_vertices) {
            int target = rng.below(extra_parts + 1);
            if (target == extra_parts)
                parts[rng.below(k)].insert(v);
            else
                parts[k + target].insert(v);
        }
        parts.erase(std::remove_if(parts.begin() + k, parts.end(), [](const VertexSet& s) { return s.empty(); }),
                    parts.end());

        int f = int(parts.size()) - k;
        AggregateResult result = aggregate(inst, parts);
        CHECK(result.cut.valid_for(inst));
        int cap = f == 0 ? 0 : (f + k - 1) / k;
        CHECK(result.bucket_cap == cap);
        for (int size : result.bucket_sizes) CHECK(size <= cap);

        double input_power = 0.0;
        for (const auto& part : parts) input_power += std::pow(cut_weight(inst.graph, part), p);
        double output_power = std::pow(lp_objective(inst, result.cut), p);
        double bound = std::pow(double(cap + 1), p - 1.0) * input_power;
        CHECK(output_power <= bound + 1e-9 * std::max(1.0, bound));
    }
}

TEST_CASE("trivial solve on the star") {
    Instance star = gen_star(4).instance;
    star.p = 2.0;
    TrivialReport report = trivial_solve_detailed(star);
    for (int i = 0; i < 4; ++i) {
        CHECK(report.isolating_sets[i] == VertexSet::of(5, {i}));
        CHECK(report.isolating_values[i] == doctest::Approx(1.0));
    }
    CHECK(report.cut.part == std::vector<int>{0, 1, 2, 3, 0});
    CHECK(report.objective == doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));
}

TEST_CASE("trivial solve ratio bound and preserved isolating values") {
    Rng rng(401);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 4 + rng.below(6);
        int k = 2 + rng.below(3);
        double p = rep % 3 == 0 ? 1.0 : (rep % 3 == 1 ? 2.0 : kInfiniteP);
        Instance inst = testutil::random_instance(rng, n, k, p);
        TrivialReport report = trivial_solve_detailed(inst);

        for (int i = 0; i < k; ++i) {
            CHECK(report.isolating_sets[i].contains(inst.terminals[i]));
            CHECK(near(cut_weight(inst.graph, report.isolating_sets[i]), report.isolating_values[i]));
            for (int j = i + 1; j < k; ++j) CHECK_FALSE(report.isolating_sets[i].intersects(report.isolating_sets[j]));
        }

        double exact = solve_exact(inst).objective;
        double bound = 2.0 * std::pow(double(k), p == kInfiniteP ? 1.0 : 1.0 - 1.0 / p);
        if (exact > 1e-12)
            CHECK(report.objective / exact <= bound + 1e-9);
        else
            CHECK(report.objective <= 1e-9);
    }
}

TEST_CASE("approx_solve rejects p = infinity") {
    Instance star = gen_star(3).instance;
    star.p = kInfiniteP;
    CHECK_THROWS_AS(approx_solve(star), UnsupportedP);
}

TEST_CASE("approx_solve at k=2 returns the min-cut optimum") {
    Rng rng(503);
    for (int rep = 0; rep < 10; ++rep) {
        Instance inst = testutil::random_instance(rng, 4 + rng.below(5), 2, 1.0 + 2.0 * rng.unit());
        PipelineReport report = approx_solve(inst);
        VertexSet sinks(inst.n());
        sinks.insert(inst.terminals[1]);
        double mincut = min_st_cut(inst.graph, inst.terminals[0], sinks).value;
        CHECK(near(report.objective, std::pow(2.0, 1.0 / inst.p) * mincut));
        CHECK(report.cut.valid_for(inst));
    }
}

TEST_CASE("approx_solve is sandwiched between the oracle and the trivial solution") {
    Rng rng(601);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 4 + rng.below(7);
        int k = 2 + rng.below(3);
        Instance inst = testutil::random_instance(rng, n, k, rep % 2 ? 2.0 : 1.5);
        PipelineReport report = approx_solve(inst);
        double exact = solve_exact(inst).objective;
        double trivial = trivial_solve_detailed(inst).objective;
        CHECK(report.objective >= exact - 1e-9 * std::max(1.0, exact));
        CHECK(report.objective <= trivial + 1e-12);
        CHECK(report.cut.valid_for(inst));
        for (int i = 0; i < k; ++i) CHECK(report.cut.part[inst.terminals[i]] == i);
    }
}
