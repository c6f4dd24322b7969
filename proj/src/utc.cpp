#include "lpmwc/utc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "lpmwc/errors.hpp"

namespace lpmwc {

namespace {

void check_query(const UtcQuery& q) {
    if (q.graph == nullptr) throw std::invalid_argument("utc: missing graph");
    if (int(q.y.size()) != q.graph->n) throw std::invalid_argument("utc: y size mismatch");
    for (double v : q.y)
        if (!(v >= 0.0)) throw std::invalid_argument("utc: vertex weights must be nonnegative");
    if (!(q.tau >= 0.0 && q.tau <= 1.0)) throw std::invalid_argument("utc: tau must be in [0, 1]");
}

// lexicographic comparison of bitmasks as ascending vertex sequences
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

VertexSet mask_to_set(int n, std::uint32_t mask) {
    VertexSet s(n);
    while (mask) {
        s.insert(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace

UtcResult utc_exact(const UtcQuery& q) {
    check_query(q);
    const Graph& g = *q.graph;
    const int n = g.n;
    if (n > kUtcExactMaxN) throw SizeLimit("utc_exact: n > " + std::to_string(kUtcExactMaxN));

    double y_total = 0.0;
    for (double v : q.y) y_total += v;
    const double need = q.tau * y_total;

    std::uint32_t term_mask = 0;
    for (int t : q.terminals) term_mask |= std::uint32_t(1) << t;

    auto adj = g.adjacency();

    bool have_best = false;
    double best_cut = 0.0;
    std::uint32_t best_mask = 0;

    double cut = 0.0;
    double ys = 0.0;
    std::uint32_t cur = 0;

    auto consider = [&](std::uint32_t mask, double incr_cut) {
        // loose filter on the incremental value, then a fresh recomputation
        if (have_best && incr_cut > best_cut + kRelTol * cmp_scale(incr_cut, best_cut)) return;
        VertexSet s = mask_to_set(n, mask);
        double fresh_cut = cut_weight(g, s);
        double fresh_y = 0.0;
        s.for_each([&](int v) { fresh_y += q.y[v]; });
        if (fresh_y < need) return;
        if (!have_best || definitely_less(fresh_cut, best_cut) ||
            (near(fresh_cut, best_cut) && mask_lex_less(mask, best_mask))) {
            have_best = true;
            best_cut = fresh_cut;
            best_mask = mask;
        }
    };

    if (0.0 >= need) consider(0, 0.0);

    // Gray-code walk: consecutive subsets differ in the single bit
    // countr_zero(i), so cut and mass update in O(deg).
    const double mass_slack = 1e-12 * (1.0 + (need < 0 ? -need : need));
    const std::uint64_t limit = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i < limit; ++i) {
        int b = std::countr_zero(i);
        if (((cur >> b) & 1u) == 0) {
            double delta = 0.0;
            for (const auto& [u, w] : adj[b]) delta += ((cur >> u) & 1u) ? -w : w;
            cut += delta;
            ys += q.y[b];
            cur |= std::uint32_t(1) << b;
        } else {
            cur &= ~(std::uint32_t(1) << b);
            double delta = 0.0;
            for (const auto& [u, w] : adj[b]) delta += ((cur >> u) & 1u) ? w : -w;
            cut += delta;
            ys -= q.y[b];
        }
        // loose mass filter; consider() re-sums and applies the exact bound
        if (ys >= need - mass_slack && std::popcount(cur & term_mask) <= 1) consider(cur, cut);
    }

    if (!have_best) throw InfeasibleError("utc_exact: no subset satisfies the mass and terminal constraints");

    UtcResult r;
    r.set = mask_to_set(n, best_mask);
    r.cut = best_cut;
    r.set.for_each([&](int v) { r.y_mass += q.y[v]; });
    r.mode = UtcMode::exact;
    return r;
}

namespace {

struct GrowthCandidate {
    VertexSet set;
    bool valid = false;
};

// Deterministic region growth from a seed: repeatedly absorb the vertex
// minimizing the resulting cut (ties by smallest id), stopping at the first
// prefix whose y-mass reaches `need`. With avoid_second_terminal the growth
// never forms a two-terminal prefix; otherwise such a crossing prefix is
// discarded.
GrowthCandidate grow_from(const Graph& g, const std::vector<double>& y, const std::vector<char>& is_term,
                          int seed, double need, bool avoid_second_terminal,
                          const std::vector<std::vector<std::pair<int, double>>>& adj) {
    const int n = g.n;
    std::vector<char> inside(n, 0);
    std::vector<double> into(n, 0.0);  // weight from v into the region
    std::vector<double> wdeg(n, 0.0);
    for (int v = 0; v < n; ++v)
        for (const auto& [u, w] : adj[v]) wdeg[v] += w;

    double cut = wdeg[seed];
    double mass = y[seed];
    int terms = is_term[seed] ? 1 : 0;
    inside[seed] = 1;
    for (const auto& [u, w] : adj[seed]) into[u] += w;

    GrowthCandidate out;
    auto snapshot = [&]() {
        out.set = VertexSet(n);
        for (int v = 0; v < n; ++v)
            if (inside[v]) out.set.insert(v);
        out.valid = true;
    };

    if (mass >= need) {
        snapshot();
        return out;
    }

    for (int grown = 1; grown < n; ++grown) {
        int pick = -1;
        double pick_cut = 0.0;
        for (int v = 0; v < n; ++v) {
            if (inside[v]) continue;
            if (avoid_second_terminal && is_term[v] && terms >= 1) continue;
            double c = cut + wdeg[v] - 2.0 * into[v];
            if (pick < 0 || definitely_less(c, pick_cut)) {
                pick = v;
                pick_cut = c;
            }
        }
        if (pick < 0) break;
        inside[pick] = 1;
        cut = pick_cut;
        mass += y[pick];
        if (is_term[pick]) ++terms;
        for (const auto& [u, w] : adj[pick]) into[u] += w;
        if (mass >= need) {
            if (terms <= 1) snapshot();
            return out;  // first crossing prefix decides this growth
        }
    }
    return out;
}

}  // namespace

UtcResult utc_heuristic(const UtcQuery& q, double relax) {
    check_query(q);
    const Graph& g = *q.graph;
    const int n = g.n;

    double y_total = 0.0;
    for (double v : q.y) y_total += v;
    if (!(y_total > 0.0)) throw std::invalid_argument("utc_heuristic: y(V) must be positive");

    const double need = relax * q.tau * y_total;
    std::vector<char> is_term(n, 0);
    for (int t : q.terminals) is_term[t] = 1;
    auto adj = g.adjacency();

    bool have_best = false;
    double best_cut = 0.0;
    VertexSet best_set;

    auto consider = [&](const VertexSet& s) {
        double mass = 0.0;
        int terms = 0;
        s.for_each([&](int v) {
            mass += q.y[v];
            terms += is_term[v];
        });
        if (mass < need || terms > 1) return;
        double c = cut_weight(g, s);
        if (!have_best || definitely_less(c, best_cut) ||
            (near(c, best_cut) && VertexSet::lex_less(s, best_set))) {
            have_best = true;
            best_cut = c;
            best_set = s;
        }
    };

    for (int v = 0; v < n; ++v) {
        VertexSet single(n);
        single.insert(v);
        consider(single);
    }
    for (int seed = 0; seed < n; ++seed) {
        for (bool avoid : {false, true}) {
            auto cand = grow_from(g, q.y, is_term, seed, need, avoid, adj);
            if (cand.valid) consider(cand.set);
        }
    }

    if (!have_best) throw InfeasibleError("utc_heuristic: relaxed feasibility is unattainable");

    UtcResult r;
    r.set = best_set;
    r.cut = best_cut;
    r.set.for_each([&](int v) { r.y_mass += q.y[v]; });
    r.mode = UtcMode::heuristic;
    return r;
}

UtcResult utc_solve(const UtcQuery& q, UtcMode mode, double relax) {
    if (mode == UtcMode::exact) return utc_exact(q);
    if (mode == UtcMode::heuristic) return utc_heuristic(q, relax);
    return q.graph != nullptr && q.graph->n <= kUtcExactMaxN ? utc_exact(q) : utc_heuristic(q, relax);
}

}  // namespace lpmwc
