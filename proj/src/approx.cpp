#include "lpmwc/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lpmwc/errors.hpp"
#include "lpmwc/flow.hpp"

namespace lpmwc {

double default_beta(int n, int k, double beta_scale) {
    double ln = std::max(1.0, std::log2(double(n)));
    double lk = std::max(1.0, std::log2(2.0 * double(k)));
    return beta_scale * std::sqrt(ln * lk);
}

MwuResult mwu_cover(const Instance& inst, double D, double beta, UtcMode utc_mode, double utc_relax) {
    inst.validate();
    if (!(D > 0.0)) throw std::invalid_argument("mwu_cover: D must be positive");
    if (!inst.has_finite_p()) throw UnsupportedP("mwu_cover: p = inf is not supported");

    const int n = inst.n();
    const int k = inst.k();
    const double p = inst.p;
    const int levels = int(std::ceil(std::log2(2.0 * double(k))));
    const std::size_t cap = std::size_t(64) * std::size_t(k) * std::size_t(std::max(1.0, std::ceil(std::log2(double(n)))));

    MwuResult result;
    result.coverage.assign(n, 0);
    std::vector<double> y(n, 1.0);
    double y_total = double(n);

    while (y_total > 1.0 / double(n)) {
        if (result.iterations >= cap) {
            throw IterationCap("mwu_cover: iteration cap " + std::to_string(cap) +
                               " exceeded; UTC keeps returning sets of negligible mass");
        }
        ++result.iterations;

        bool accepted = false;
        UtcResult chosen;
        bool have_fallback = false;
        double fallback_violation = 0.0;
        UtcResult fallback;

        for (int i = 1; i <= levels; ++i) {
            const double tau = std::ldexp(1.0, -i);  // 2^-i
            UtcQuery q;
            q.graph = &inst.graph;
            q.y = y;
            q.tau = tau;
            q.terminals = inst.terminals;
            UtcResult res;
            try {
                res = utc_solve(q, utc_mode, utc_relax);
            } catch (const InfeasibleError&) {
                continue;  // no candidate at this level; smaller tau always qualifies
            }
            const double threshold = beta * std::pow(4.0 * D * tau, 1.0 / p);
            if (res.cut <= threshold) {
                chosen = res;
                accepted = true;
                break;
            }
            const double violation = std::pow(res.cut, p) * std::ldexp(1.0, i) / (4.0 * D);
            if (!have_fallback || violation < fallback_violation) {
                have_fallback = true;
                fallback_violation = violation;
                fallback = res;
            }
        }

        if (!accepted) {
            if (!have_fallback) throw InfeasibleError("mwu_cover: UTC produced no candidate at any level");
            chosen = fallback;
            result.certified = false;
        }

        result.sets.push_back(chosen.set);
        chosen.set.for_each([&](int v) {
            y[v] *= 0.5;
            result.coverage[v] += 1;
        });
        y_total = std::accumulate(y.begin(), y.end(), 0.0);
    }

    return result;
}

UncrossResult uncross(const Graph& g, const CutCollection& sets,
                      const std::function<void(const std::vector<VertexSet>&)>& observer) {
    VertexSet covered(g.n);
    for (const auto& s : sets) covered = covered.unite(s);
    if (covered != VertexSet::full(g.n)) throw UnionNotV("uncross: the sets do not cover V");

    UncrossResult result;
    for (const auto& s : sets)
        if (!s.empty()) result.parts.push_back(s);
    auto& family = result.parts;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < family.size() && !changed; ++a) {
            for (std::size_t b = a + 1; b < family.size() && !changed; ++b) {
                if (!family[a].intersects(family[b])) continue;
                VertexSet a_minus_b = family[a].minus(family[b]);
                if (cut_weight(g, family[a]) >= cut_weight(g, a_minus_b)) {
                    family[a] = a_minus_b;
                } else {
                    family[b] = family[b].minus(family[a]);
                }
                ++result.steps;
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if (family[i].empty()) {
                        family.erase(family.begin() + i);
                        break;  // a step empties at most one set
                    }
                }
                if (observer) observer(family);
                changed = true;
            }
        }
    }
    return result;
}

AggregateResult aggregate(const Instance& inst, const std::vector<VertexSet>& parts) {
    inst.validate();
    const int k = inst.k();
    const int n = inst.n();

    // validate: partition of V with at most one terminal per part
    {
        std::vector<int> owner(n, -1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            parts[i].for_each([&](int v) {
                if (owner[v] != -1) throw std::invalid_argument("aggregate: parts overlap");
                owner[v] = int(i);
            });
        }
        for (int v = 0; v < n; ++v)
            if (owner[v] == -1) throw std::invalid_argument("aggregate: parts do not cover V");
    }

    std::vector<int> terminal_part(k, -1);
    std::vector<std::size_t> free_parts;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int terms = 0;
        int index = -1;
        parts[i].for_each([&](int v) {
            int t = inst.terminal_index(v);
            if (t >= 0) {
                ++terms;
                index = t;
            }
        });
        if (terms > 1) throw std::invalid_argument("aggregate: a part holds two terminals");
        if (terms == 1)
            terminal_part[index] = int(i);
        else
            free_parts.push_back(i);
    }

    std::vector<double> cut_of(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) cut_of[i] = cut_weight(inst.graph, parts[i]);

    AggregateResult result;
    const int f = int(free_parts.size());
    result.bucket_cap = f == 0 ? 0 : (f + k - 1) / k;
    result.bucket_sizes.assign(k, 0);

    // heaviest free parts first, each into the least-loaded open bucket
    std::stable_sort(free_parts.begin(), free_parts.end(),
                     [&](std::size_t a, std::size_t b) { return cut_of[a] > cut_of[b]; });

    std::vector<double> bucket_sum(k, 0.0);
    std::vector<std::vector<std::size_t>> bucket(k);
    for (std::size_t part_id : free_parts) {
        int best = -1;
        for (int j = 0; j < k; ++j) {
            if (result.bucket_sizes[j] >= result.bucket_cap) continue;
            if (best < 0 || bucket_sum[j] < bucket_sum[best]) best = j;
        }
        bucket[best].push_back(part_id);
        bucket_sum[best] += cut_of[part_id];
        result.bucket_sizes[best] += 1;
    }

    // heaviest bucket merges into the lightest terminal part
    std::vector<int> bucket_order(k);
    std::iota(bucket_order.begin(), bucket_order.end(), 0);
    std::stable_sort(bucket_order.begin(), bucket_order.end(),
                     [&](int a, int b) { return bucket_sum[a] > bucket_sum[b]; });
    std::vector<int> terminal_order(k);
    std::iota(terminal_order.begin(), terminal_order.end(), 0);
    std::stable_sort(terminal_order.begin(), terminal_order.end(), [&](int a, int b) {
        return cut_of[terminal_part[a]] < cut_of[terminal_part[b]];
    });

    result.cut.part.assign(n, -1);
    for (int i = 0; i < k; ++i) parts[terminal_part[i]].for_each([&](int v) { result.cut.part[v] = i; });
    for (int j = 0; j < k; ++j) {
        int target = terminal_order[j];  // j-th lightest terminal part
        for (std::size_t part_id : bucket[bucket_order[j]])
            parts[part_id].for_each([&](int v) { result.cut.part[v] = target; });
    }
    return result;
}

TrivialReport trivial_solve_detailed(const Instance& inst) {
    inst.validate();
    const int k = inst.k();
    const int n = inst.n();

    TrivialReport report;
    VertexSet all_terminals(n);
    for (int t : inst.terminals) all_terminals.insert(t);

    for (int i = 0; i < k; ++i) {
        VertexSet others = all_terminals;
        others.erase(inst.terminals[i]);
        StCut cut = min_st_cut(inst.graph, inst.terminals[i], others);
        report.isolating_sets.push_back(cut.source_side);
        report.isolating_values.push_back(cut.value);
    }

    // Pairwise uncrossing: both differences of a crossing pair are still
    // minimum isolating cuts, so shrinking both sides at once keeps every
    // set optimal and one pass over the pairs leaves them disjoint.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!report.isolating_sets[i].intersects(report.isolating_sets[j])) continue;
            VertexSet new_i = report.isolating_sets[i].minus(report.isolating_sets[j]);
            VertexSet new_j = report.isolating_sets[j].minus(report.isolating_sets[i]);
            report.isolating_sets[i] = new_i;
            report.isolating_sets[j] = new_j;
        }
    }

    report.cut.part.assign(n, 0);  // leftover R lands in part 1
    for (int i = 0; i < k; ++i) report.isolating_sets[i].for_each([&](int v) { report.cut.part[v] = i; });
    report.objective = lp_objective(inst, report.cut);
    return report;
}

MultiwayCut trivial_solve(const Instance& inst) { return trivial_solve_detailed(inst).cut; }

PipelineReport approx_solve(const Instance& inst, const ApproxOptions& options) {
    inst.validate();
    if (!inst.has_finite_p()) throw UnsupportedP("approx_solve: p = inf; use trivial_solve or solve_exact");
    const double p = inst.p;
    const int k = inst.k();

    TrivialReport trivial = trivial_solve_detailed(inst);

    PipelineReport report;
    report.cut = trivial.cut;
    report.objective = trivial.objective;
    report.trivial_won = true;
    report.certified = true;

    // Lower bound: sum of isolating-cut values to the p-th power.
    double lower = 0.0;
    for (double c : trivial.isolating_values) lower += std::pow(c, p);
    const double upper = std::pow(trivial.objective, p);
    if (!(upper > 0.0)) return report;  // a zero-objective cut is optimal

    const double beta = default_beta(inst.n(), k, options.beta_scale);
    bool have_run = false;
    double run_objective = 0.0;
    PipelineReport best_run;
    for (int j = 0; j < options.max_grid; ++j) {
        const double D = upper / std::ldexp(1.0, j);
        if (D < lower && j > 0) break;
        report.d_grid.push_back(D);

        MwuResult cover = mwu_cover(inst, D, beta, options.utc_mode, options.utc_relax);
        UncrossResult partition = uncross(inst.graph, cover.sets);
        AggregateResult aggregated = aggregate(inst, partition.parts);
        const double objective = lp_objective(inst, aggregated.cut);

        // runs merge by (objective, D): the grid descends, so <= makes the
        // smaller D win exact ties
        if (!have_run || objective <= run_objective) {
            have_run = true;
            run_objective = objective;
            best_run.cut = aggregated.cut;
            best_run.D_used = D;
            best_run.mwu_sets = cover.sets.size();
            best_run.uncross_steps = partition.steps;
            best_run.certified = cover.certified;
        }
    }

    // the trivial candidate is displaced only by a strictly better run
    if (have_run && run_objective < report.objective) {
        report.cut = best_run.cut;
        report.objective = run_objective;
        report.D_used = best_run.D_used;
        report.mwu_sets = best_run.mwu_sets;
        report.uncross_steps = best_run.uncross_steps;
        report.certified = best_run.certified;
        report.trivial_won = false;
    }
    return report;
}

}  // namespace lpmwc
