#include "lpmwc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lpmwc/errors.hpp"

namespace lpmwc {

namespace {

double pow_p(double x, double p) {
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}

struct Enumerator {
    const Instance& inst;
    double p;
    int k;
    bool finite_p;
    double scale;      // fixed scale for the power sums, max(1, total weight)
    double sum_slack;  // pruning threshold factor (1 - kRelTol)^p on power sums

    std::vector<int> free_vertices;
    // edges from free_vertices[d] to vertices assigned before it
    std::vector<std::vector<std::pair<int, double>>> back_edges;

    std::vector<int> assign;        // vertex -> part, -1 while unassigned
    std::vector<double> part_cut;   // cut value among assigned vertices
    std::vector<double> part_pow;   // (part_cut / scale)^p
    double sum_pow = 0.0;           // sum of part_pow (finite p)
    double cur_max = 0.0;           // max part_cut (p = infinity)

    bool have_best = false;
    double best_metric = 0.0;  // power sum (finite p) or max (p = inf)
    std::vector<int> best_assign;
    std::uint64_t states = 0;

    explicit Enumerator(const Instance& instance)
        : inst(instance), p(instance.p), k(instance.k()), finite_p(instance.has_finite_p()) {
        scale = std::max(1.0, inst.graph.total_weight());
        sum_slack = finite_p ? std::pow(1.0 - kRelTol, p) : (1.0 - kRelTol);
        free_vertices = inst.non_terminals();

        assign.assign(inst.n(), -1);
        for (int i = 0; i < k; ++i) assign[inst.terminals[i]] = i;

        std::vector<int> order(inst.n(), -1);  // assignment position, terminals first
        for (int i = 0; i < k; ++i) order[inst.terminals[i]] = 0;
        for (std::size_t d = 0; d < free_vertices.size(); ++d) order[free_vertices[d]] = int(d) + 1;

        back_edges.resize(free_vertices.size());
        part_cut.assign(k, 0.0);
        for (const auto& e : inst.graph.edges) {
            int ou = order[e.u], ov = order[e.v];
            if (ou == 0 && ov == 0) {
                // terminal-terminal edge: contributes from the start
                int pu = assign[e.u], pv = assign[e.v];
                if (pu != pv) {
                    part_cut[pu] += e.w;
                    part_cut[pv] += e.w;
                }
            } else if (ou > ov) {
                back_edges[ou - 1].emplace_back(e.v, e.w);
            } else {
                back_edges[ov - 1].emplace_back(e.u, e.w);
            }
        }

        part_pow.assign(k, 0.0);
        for (int i = 0; i < k; ++i) {
            part_pow[i] = finite_p ? pow_p(part_cut[i] / scale, p) : 0.0;
            sum_pow += part_pow[i];
            cur_max = std::max(cur_max, part_cut[i]);
        }
    }

    double metric() const { return finite_p ? sum_pow : cur_max; }

    bool prunable(double m) const { return have_best && m >= best_metric * sum_slack; }

    // exact recomputation from part_cut, avoiding drift from the running sum
    double fresh_metric() const {
        if (!finite_p) {
            double mx = 0.0;
            for (int i = 0; i < k; ++i) mx = std::max(mx, part_cut[i]);
            return mx;
        }
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += pow_p(part_cut[i] / scale, p);
        return s;
    }

    void dfs(std::size_t depth) {
        if (depth == free_vertices.size()) {
            if (prunable(metric())) return;  // cheap filter on the running sum
            double m = fresh_metric();
            if (!have_best || m < best_metric * sum_slack) {
                have_best = true;
                best_metric = m;
                best_assign = assign;
            }
            return;
        }
        const int v = free_vertices[depth];
        const auto& backs = back_edges[depth];
        const double saved_sum = sum_pow;
        const double saved_max = cur_max;
        std::vector<std::pair<int, double>> undo;  // (part, old cut value)
        undo.reserve(backs.size() + 1);

        for (int q = 0; q < k; ++q) {
            ++states;
            assign[v] = q;
            undo.clear();
            auto touch = [&](int part) {
                for (const auto& [tp, old] : undo)
                    if (tp == part) return;
                undo.emplace_back(part, part_cut[part]);
            };
            for (const auto& [u, w] : backs) {
                int pu = assign[u];
                if (pu != q) {
                    touch(pu);
                    touch(q);
                    part_cut[pu] += w;
                    part_cut[q] += w;
                }
            }
            if (finite_p) {
                for (const auto& [tp, old] : undo) {
                    double np = pow_p(part_cut[tp] / scale, p);
                    sum_pow += np - part_pow[tp];
                    part_pow[tp] = np;
                }
            } else {
                for (const auto& [tp, old] : undo) cur_max = std::max(cur_max, part_cut[tp]);
            }

            if (!prunable(metric())) dfs(depth + 1);

            // bit-exact restore from the undo log
            for (const auto& [tp, old] : undo) {
                part_cut[tp] = old;
                if (finite_p) part_pow[tp] = pow_p(old / scale, p);
            }
            sum_pow = saved_sum;
            cur_max = saved_max;
        }
        assign[v] = -1;
    }
};

}  // namespace

ExactReport solve_exact(const Instance& inst, std::uint64_t budget) {
    inst.validate();
    const int k = inst.k();
    const std::size_t free_count = inst.non_terminals().size();

    std::uint64_t states = 1;
    for (std::size_t i = 0; i < free_count; ++i) {
        if (states > budget / std::uint64_t(k)) {
            throw BudgetExceeded("solve_exact: k^(n-k) exceeds budget " + std::to_string(budget));
        }
        states *= std::uint64_t(k);
    }
    if (states > budget) throw BudgetExceeded("solve_exact: k^(n-k) exceeds budget " + std::to_string(budget));

    Enumerator e(inst);
    e.dfs(0);

    ExactReport report;
    report.optimum.part = e.best_assign;
    report.objective = lp_objective(inst, report.optimum);
    report.states_explored = e.states;
    return report;
}

}  // namespace lpmwc
