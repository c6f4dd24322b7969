#pragma once

#include <vector>

#include "lpmwc/graph.hpp"

namespace lpmwc {

// Unbalanced terminal cut: min{ w(delta(S)) : y(S) >= tau * y(V), |S ∩ T| <= 1 }.
struct UtcQuery {
    const Graph* graph = nullptr;
    std::vector<double> y;      // vertex weights, y >= 0
    double tau = 0.0;           // in [0, 1]
    std::vector<int> terminals;
};

enum class UtcMode { automatic, exact, heuristic };

struct UtcResult {
    VertexSet set;
    double cut = 0.0;
    double y_mass = 0.0;
    UtcMode mode = UtcMode::exact;
};

constexpr int kUtcExactMaxN = 24;

/// Exact minimizer by 2^n enumeration (n <= 24, Gray-code incremental
/// updates). Feasibility is taken exactly as the definition. Ties are
/// broken by the lexicographically smallest vertex set.
/// Throws Infeasible when no subset qualifies, SizeLimit when n > 24.
UtcResult utc_exact(const UtcQuery& q);

/// Heuristic stand-in for the cited bicriteria algorithm. Returns a set
/// with |S ∩ T| <= 1 and y(S) >= relax * tau * y(V) whenever such a set
/// exists. Candidates come from deterministic region growing from every
/// vertex seed (absorb the vertex minimizing the resulting cut, record the
/// first prefix whose y-mass crosses the relaxed bound, discard prefixes
/// with >= 2 terminals; a second growth pass refuses to absorb a second
/// terminal so attainable mass is never missed), plus all single-vertex
/// sets. Throws Infeasible when even relaxed feasibility is unattainable.
UtcResult utc_heuristic(const UtcQuery& q, double relax = 0.25);

/// Mode dispatch: automatic picks exact for n <= 24, heuristic otherwise.
UtcResult utc_solve(const UtcQuery& q, UtcMode mode, double relax = 0.25);

}  // namespace lpmwc
