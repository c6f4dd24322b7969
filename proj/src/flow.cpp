#include "lpmwc/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lpmwc {

namespace {

// Dinic's algorithm on doubles. Residuals below eps count as saturated so
// rounding crumbs cannot stall the phase loop; the reported cut value is
// re-summed from original edge weights, not taken from the flow.
class Dinic {
  public:
    explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_arc(int u, int v, double cap_uv, double cap_vu) {
        arcs_.push_back({v, head_[u], cap_uv});
        head_[u] = int(arcs_.size()) - 1;
        arcs_.push_back({u, head_[v], cap_vu});
        head_[v] = int(arcs_.size()) - 1;
    }

    void run(int s, int t, double eps) {
        eps_ = eps;
        while (bfs(s, t)) {
            it_ = head_;
            while (dfs(s, t, std::numeric_limits<double>::infinity()) > eps_) {
            }
        }
    }

    // vertices reachable from s via arcs with residual > eps
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > eps_ && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

  private:
    struct Arc {
        int to;
        int next;
        double cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > eps_ && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    double dfs(int u, int t, double pushed) {
        if (u == t) return pushed;
        for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap > eps_ && level_[arc.to] == level_[u] + 1) {
                double got = dfs(arc.to, t, std::min(pushed, arc.cap));
                if (got > eps_) {
                    arc.cap -= got;
                    arcs_[a ^ 1].cap += got;
                    return got;
                }
            }
        }
        level_[u] = -1;
        return 0.0;
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::vector<Arc> arcs_;
    double eps_ = 0.0;
};

}  // namespace

StCut min_st_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
    if (sources.empty() || sinks.empty()) throw std::invalid_argument("min_st_cut: empty source or sink set");
    if (sources.intersects(sinks)) throw std::invalid_argument("min_st_cut: sources and sinks intersect");

    const int n = g.n;
    const int super_s = n;
    const int super_t = n + 1;
    const double total = g.total_weight();
    const double inf_cap = 1.0 + total;
    const double eps = total > 0 ? total * 1e-13 : 0.0;

    Dinic dinic(n + 2);
    for (const auto& e : g.edges) dinic.add_arc(e.u, e.v, e.w, e.w);
    sources.for_each([&](int v) { dinic.add_arc(super_s, v, inf_cap, 0.0); });
    sinks.for_each([&](int v) { dinic.add_arc(v, super_t, inf_cap, 0.0); });

    dinic.run(super_s, super_t, eps);
    auto seen = dinic.reachable(super_s);

    StCut cut;
    cut.source_side = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (seen[v]) cut.source_side.insert(v);
    cut.value = cut_weight(g, cut.source_side);
    return cut;
}

StCut min_st_cut(const Graph& g, int source, const VertexSet& sinks) {
    VertexSet s(g.n);
    s.insert(source);
    return min_st_cut(g, s, sinks);
}

}  // namespace lpmwc
