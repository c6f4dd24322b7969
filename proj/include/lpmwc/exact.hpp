#pragma once

#include <cstdint>

#include "lpmwc/graph.hpp"

namespace lpmwc {

constexpr std::uint64_t kDefaultExactBudget = std::uint64_t(1) << 27;

struct ExactReport {
    MultiwayCut optimum;
    double objective = 0.0;
    std::uint64_t states_explored = 0;
};

/// Brute-force optimal multiway cut: enumerates the k^(n-k) assignments of
/// the non-terminals with incremental cut-value maintenance and
/// branch-and-bound pruning (the partial objective only grows along a
/// branch, so it is a valid lower bound). Ties are broken by the
/// lexicographically smallest assignment vector over non-terminals in
/// vertex-id order; pruning never changes the returned optimum.
///
/// Throws BudgetExceeded when k^(n-k) > budget.
ExactReport solve_exact(const Instance& inst, std::uint64_t budget = kDefaultExactBudget);

}  // namespace lpmwc
