#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lpmwc/vertex_set.hpp"

namespace lpmwc {

constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

// Relative comparison tolerance used for all cut-value comparisons.
constexpr double kRelTol = 1e-9;

inline double cmp_scale(double a, double b) {
    double s = 1.0;
    if (a > s) s = a;
    if (b > s) s = b;
    return s;
}

// a == b up to kRelTol relative to max(1, |a|, |b|).
inline bool near(double a, double b, double tol = kRelTol) {
    double d = a - b;
    if (d < 0) d = -d;
    return d <= tol * cmp_scale(a < 0 ? -a : a, b < 0 ? -b : b);
}

// a strictly better (smaller) than b, outside the tie band.
inline bool definitely_less(double a, double b, double tol = kRelTol) {
    return a < b && !near(a, b, tol);
}

struct Edge {
    int u;
    int v;
    double w;
};

/// Undirected graph with nonnegative edge weights. Parallel edges are kept
/// as-is and summed during cut evaluation; zero-weight edges are retained
/// because they matter for connectivity queries.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices) {}

    void add_edge(int u, int v, double w);

    double total_weight() const;

    // adjacency[v] = list of (neighbor, weight), one entry per parallel edge
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

/// A problem instance: graph, ordered terminal list t_1..t_k, and the norm
/// exponent p (p >= 1, kInfiniteP for the min-max objective).
struct Instance {
    Graph graph;
    std::vector<int> terminals;
    double p = 1.0;

    int k() const { return int(terminals.size()); }
    int n() const { return graph.n; }
    bool has_finite_p() const { return p != kInfiniteP; }

    // throws std::invalid_argument when the invariants fail
    void validate() const;

    bool is_terminal(int v) const;
    // index in [0,k) of terminal v, or -1
    int terminal_index(int v) const;
    std::vector<int> non_terminals() const;
};

/// Assignment of every vertex to one of the k terminal-indexed parts
/// (0-based part indices internally; t_i maps to part i).
struct MultiwayCut {
    std::vector<int> part;  // vertex id -> part index in [0, k)

    bool valid_for(const Instance& inst) const;
    VertexSet part_set(const Instance& inst, int i) const;
    std::vector<VertexSet> parts(const Instance& inst) const;
};

using CutCollection = std::vector<VertexSet>;

/// w(delta(S)): total weight of edges with exactly one endpoint in s.
double cut_weight(const Graph& g, const VertexSet& s);

/// p-norm of a vector of nonnegative values, max-scaled so that large
/// gadget weights survive exponentiation; p = infinity returns the max.
double lp_norm(std::span<const double> values, double p);

std::vector<double> per_part_cuts(const Instance& inst, const MultiwayCut& cut);

double lp_objective(const Instance& inst, const MultiwayCut& cut);

/// Whether each part induces a connected subgraph (singletons and empty
/// sets count as connected). Zero-weight edges participate.
std::vector<bool> part_connectivity(const Instance& inst, const MultiwayCut& cut);

bool induced_connected(const Graph& g, const VertexSet& s);

}  // namespace lpmwc
