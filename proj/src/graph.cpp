#include "lpmwc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpmwc {

void Graph::add_edge(int u, int v, double w) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!(w >= 0.0)) throw std::invalid_argument("edge weight must be nonnegative");
    edges.push_back({u, v, w});
}

double Graph::total_weight() const {
    double t = 0.0;
    for (const auto& e : edges) t += e.w;
    return t;
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& e : edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    return adj;
}

void Instance::validate() const {
    const int k = int(terminals.size());
    if (k < 2) throw std::invalid_argument("instance needs at least 2 terminals");
    if (k > graph.n) throw std::invalid_argument("more terminals than vertices");
    std::vector<int> sorted = terminals;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
        if (sorted[i] < 0 || sorted[i] >= graph.n) throw std::invalid_argument("terminal id out of range");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw std::invalid_argument("terminals must be distinct");
    }
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
}

bool Instance::is_terminal(int v) const { return terminal_index(v) >= 0; }

int Instance::terminal_index(int v) const {
    for (int i = 0; i < int(terminals.size()); ++i)
        if (terminals[i] == v) return i;
    return -1;
}

std::vector<int> Instance::non_terminals() const {
    std::vector<int> out;
    for (int v = 0; v < graph.n; ++v)
        if (!is_terminal(v)) out.push_back(v);
    return out;
}

bool MultiwayCut::valid_for(const Instance& inst) const {
    if (int(part.size()) != inst.n()) return false;
    const int k = inst.k();
    for (int v = 0; v < inst.n(); ++v)
        if (part[v] < 0 || part[v] >= k) return false;
    for (int i = 0; i < k; ++i)
        if (part[inst.terminals[i]] != i) return false;
    return true;
}

VertexSet MultiwayCut::part_set(const Instance& inst, int i) const {
    VertexSet s(inst.n());
    for (int v = 0; v < inst.n(); ++v)
        if (part[v] == i) s.insert(v);
    return s;
}

std::vector<VertexSet> MultiwayCut::parts(const Instance& inst) const {
    std::vector<VertexSet> out(inst.k(), VertexSet(inst.n()));
    for (int v = 0; v < inst.n(); ++v) out[part[v]].insert(v);
    return out;
}

double cut_weight(const Graph& g, const VertexSet& s) {
    double total = 0.0;
    for (const auto& e : g.edges)
        if (s.contains(e.u) != s.contains(e.v)) total += e.w;
    return total;
}

double lp_norm(std::span<const double> values, double p) {
    if (values.empty()) return 0.0;
    double m = 0.0;
    for (double v : values)
        if (v > m) m = v;
    if (m == 0.0) return 0.0;
    if (p == kInfiniteP) return m;
    if (p == 1.0) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    double s = 0.0;
    for (double v : values) s += std::pow(v / m, p);
    return m * std::pow(s, 1.0 / p);
}

std::vector<double> per_part_cuts(const Instance& inst, const MultiwayCut& cut) {
    std::vector<double> cuts(inst.k(), 0.0);
    for (const auto& e : inst.graph.edges) {
        int pu = cut.part[e.u];
        int pv = cut.part[e.v];
        if (pu != pv) {
            cuts[pu] += e.w;
            cuts[pv] += e.w;
        }
    }
    return cuts;
}

double lp_objective(const Instance& inst, const MultiwayCut& cut) {
    auto cuts = per_part_cuts(inst, cut);
    return lp_norm(cuts, inst.p);
}

bool induced_connected(const Graph& g, const VertexSet& s) {
    const int sz = s.count();
    if (sz <= 1) return true;
    auto members = s.to_vector();
    std::vector<int> index(g.n, -1);
    for (int i = 0; i < sz; ++i) index[members[i]] = i;
    std::vector<std::vector<int>> adj(sz);
    for (const auto& e : g.edges) {
        if (s.contains(e.u) && s.contains(e.v)) {
            adj[index[e.u]].push_back(index[e.v]);
            adj[index[e.v]].push_back(index[e.u]);
        }
    }
    std::vector<char> seen(sz, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == sz;
}

std::vector<bool> part_connectivity(const Instance& inst, const MultiwayCut& cut) {
    std::vector<bool> out(inst.k());
    for (int i = 0; i < inst.k(); ++i) out[i] = induced_connected(inst.graph, cut.part_set(inst, i));
    return out;
}

}  // namespace lpmwc
