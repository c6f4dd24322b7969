#pragma once

#include <cassert>
#include <random>
#include <vector>

#include "lpmwc/graph.hpp"

namespace lpmwc::testutil {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double unit() { return double(engine() >> 11) * 0x1.0p-53; }
    int below(int n) { return int(engine() % std::uint64_t(n)); }
    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }
};

inline Graph random_graph(Rng& rng, int n, double density, double wmin = 0.5, double wmax = 8.0) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < density) g.add_edge(u, v, rng.uniform(wmin, wmax));
    return g;
}

// spanning-tree backbone plus random extras: connected with generic weights
inline Graph random_connected_graph(Rng& rng, int n, double extra_density = 0.3) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v, rng.uniform(0.5, 8.0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < extra_density) g.add_edge(u, v, rng.uniform(0.5, 8.0));
    return g;
}

inline std::vector<int> random_terminals(Rng& rng, int n, int k) {
    assert(k <= n);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < k; ++i) std::swap(ids[i], ids[i + rng.below(n - i)]);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline Instance random_instance(Rng& rng, int n, int k, double p, double density = 0.6) {
    Instance inst;
    inst.graph = random_graph(rng, n, density);
    inst.terminals = random_terminals(rng, n, k);
    inst.p = p;
    return inst;
}

inline VertexSet random_subset(Rng& rng, int n, double bias = 0.5) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.unit() < bias) s.insert(v);
    return s;
}

inline MultiwayCut random_cut(Rng& rng, const Instance& inst) {
    MultiwayCut cut;
    cut.part.assign(inst.n(), 0);
    for (int v = 0; v < inst.n(); ++v) cut.part[v] = rng.below(inst.k());
    for (int i = 0; i < inst.k(); ++i) cut.part[inst.terminals[i]] = i;
    return cut;
}

// brute-force oracle: minimum cut weight over all subsets separating
// sources from sinks (n <= ~16)
inline double brute_min_separating_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
    const int n = g.n;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.insert(v);
        if (!sources.is_subset_of(s) || s.intersects(sinks)) continue;
        best = std::min(best, cut_weight(g, s));
    }
    return best;
}

}  // namespace lpmwc::testutil
