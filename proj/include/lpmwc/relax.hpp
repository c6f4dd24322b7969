#pragma once

#include <vector>

#include "lpmwc/graph.hpp"

namespace lpmwc {

/// Per-vertex simplex vector over the k parts: rows sum to 1, x(t_i, i) = 1.
struct FractionalAssignment {
    std::vector<std::vector<double>> x;  // [vertex][part]

    static FractionalAssignment indicator(const Instance& inst, const MultiwayCut& cut);
    static FractionalAssignment uniform_star(const Instance& inst);  // center spread over all parts
};

/// Relaxation objective (sum over edges of w * |x(u,i) - x(v,i)|, p-normed
/// over parts). Throws InfeasibleAssignment naming the violated constraint.
double cp_objective(const Instance& inst, const FractionalAssignment& x);

struct StarGap {
    double integral_opt = 0.0;      // ((k-1)^p + k-1)^(1/p)
    double fractional_value = 0.0;  // (2k-2)/k * k^(1/p)
    double gap_lower_bound = 0.0;   // k^(1-1/p) / 2
    double ratio = 0.0;
};

/// Integrality-gap demonstrator on the unit star with k leaf terminals.
/// Both closed forms are cross-checked: the integral value against
/// solve_exact on the generated star, the fractional value against
/// cp_objective of the uniform assignment. Requires k >= 3, finite p >= 1.
StarGap star_gap(int k, double p);

}  // namespace lpmwc
