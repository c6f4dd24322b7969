#include "lpmwc/relax.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpmwc/errors.hpp"
#include "lpmwc/exact.hpp"
#include "lpmwc/instances.hpp"

namespace lpmwc {

FractionalAssignment FractionalAssignment::indicator(const Instance& inst, const MultiwayCut& cut) {
    FractionalAssignment out;
    out.x.assign(inst.n(), std::vector<double>(inst.k(), 0.0));
    for (int v = 0; v < inst.n(); ++v) out.x[v][cut.part[v]] = 1.0;
    return out;
}

FractionalAssignment FractionalAssignment::uniform_star(const Instance& inst) {
    FractionalAssignment out;
    const int k = inst.k();
    out.x.assign(inst.n(), std::vector<double>(k, 1.0 / double(k)));
    for (int i = 0; i < k; ++i) {
        std::fill(out.x[inst.terminals[i]].begin(), out.x[inst.terminals[i]].end(), 0.0);
        out.x[inst.terminals[i]][i] = 1.0;
    }
    return out;
}

double cp_objective(const Instance& inst, const FractionalAssignment& x) {
    const int n = inst.n();
    const int k = inst.k();
    if (int(x.x.size()) != n) throw InfeasibleAssignment("assignment has " + std::to_string(x.x.size()) +
                                                         " rows, instance has " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v) {
        if (int(x.x[v].size()) != k)
            throw InfeasibleAssignment("row of vertex " + std::to_string(v) + " has wrong arity");
        double sum = 0.0;
        for (int i = 0; i < k; ++i) {
            if (x.x[v][i] < -kRelTol)
                throw InfeasibleAssignment("x(" + std::to_string(v) + "," + std::to_string(i + 1) + ") is negative");
            sum += x.x[v][i];
        }
        if (!near(sum, 1.0))
            throw InfeasibleAssignment("row of vertex " + std::to_string(v) + " sums to " + std::to_string(sum));
    }
    for (int i = 0; i < k; ++i) {
        if (!near(x.x[inst.terminals[i]][i], 1.0))
            throw InfeasibleAssignment("x(t_" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") != 1");
    }

    std::vector<double> part_values(k, 0.0);
    for (const auto& e : inst.graph.edges)
        for (int i = 0; i < k; ++i) part_values[i] += e.w * std::abs(x.x[e.u][i] - x.x[e.v][i]);
    return lp_norm(part_values, inst.p);
}

StarGap star_gap(int k, double p) {
    if (k < 3) throw std::invalid_argument("star_gap requires k >= 3");
    if (!(p >= 1.0) || p == kInfiniteP) throw std::invalid_argument("star_gap requires finite p >= 1");

    StarGap gap;
    const double km1 = double(k - 1);
    gap.integral_opt = std::pow(std::pow(km1, p) + km1, 1.0 / p);
    gap.fractional_value = (2.0 * km1 / double(k)) * std::pow(double(k), 1.0 / p);
    gap.gap_lower_bound = std::pow(double(k), 1.0 - 1.0 / p) / 2.0;

    Instance star = gen_star(k).instance;
    star.p = p;
    ExactReport exact = solve_exact(star);
    if (!near(exact.objective, gap.integral_opt))
        throw std::logic_error("star_gap: closed form disagrees with the exact solver");
    double fractional = cp_objective(star, FractionalAssignment::uniform_star(star));
    if (!near(fractional, gap.fractional_value))
        throw std::logic_error("star_gap: closed form disagrees with the relaxation evaluator");

    gap.ratio = gap.integral_opt / gap.fractional_value;
    if (gap.ratio < gap.gap_lower_bound * (1.0 - kRelTol))
        throw std::logic_error("star_gap: gap fell below k^(1-1/p)/2");
    return gap;
}

}  // namespace lpmwc
