#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lpmwc/graph.hpp"
#include "lpmwc/utc.hpp"

namespace lpmwc {

struct MwuResult {
    CutCollection sets;
    std::vector<int> coverage;  // N_v: how many sets contain v
    std::size_t iterations = 0;
    bool certified = true;  // every iteration met its threshold test
};

/// Default beta for the covering stage:
/// beta_scale * sqrt(max(1, log2 n) * max(1, log2 2k)).
double default_beta(int n, int k, double beta_scale = 1.0);

/// Multiplicative-weights covering stage. Starting from unit vertex
/// weights, repeatedly queries UTC at tau = 2^-i for i = 1..ceil(log2 2k)
/// and accepts the first candidate with cut <= beta * (4D / 2^i)^(1/p),
/// halving the weights of the accepted set; when no level passes, the
/// candidate minimizing the normalized violation cut^p * 2^i / (4D) is
/// accepted and the run is marked uncertified. Runs while the total weight
/// exceeds 1/n, which forces every vertex into at least log2 n sets.
///
/// Throws IterationCap after 64 * k * ceil(log2 n) iterations.
MwuResult mwu_cover(const Instance& inst, double D, double beta, UtcMode utc_mode = UtcMode::automatic,
                    double utc_relax = 0.25);

struct UncrossResult {
    std::vector<VertexSet> parts;
    std::size_t steps = 0;
};

/// Posimodular uncrossing: repeatedly takes the first intersecting pair
/// (A, B) in insertion order and replaces A by A-B when
/// cut(A) >= cut(A-B), else B by B-A (posimodularity guarantees that
/// branch does not increase the cut); empty sets are dropped. The input
/// must cover V; the output is a partition of V in which every part is a
/// subset of some input set.
///
/// The observer, when set, runs after every replacement with the current
/// family.
UncrossResult uncross(const Graph& g, const CutCollection& sets,
                      const std::function<void(const std::vector<VertexSet>&)>& observer = nullptr);

struct AggregateResult {
    MultiwayCut cut;
    int bucket_cap = 0;  // ceil(|F| / k)
    std::vector<int> bucket_sizes;
};

/// Aggregation stage: terminal-free parts are greedily packed into k
/// buckets (descending cut value, each into the least-loaded bucket below
/// the ceil(|F|/k) size cap) and the heaviest bucket merges into the
/// terminal part with the smallest cut value.
AggregateResult aggregate(const Instance& inst, const std::vector<VertexSet>& parts);

struct TrivialReport {
    MultiwayCut cut;
    double objective = 0.0;
    std::vector<VertexSet> isolating_sets;  // uncrossed, disjoint, t_i in set i
    std::vector<double> isolating_values;   // min (t_i, T - t_i) cut values
};

/// The direct approximation: minimum isolating cuts, pairwise uncrossed via
/// posimodularity (each stays a minimum isolating cut), leftover merged
/// into part 1. Objective is within 2 k^(1-1/p) of optimal.
TrivialReport trivial_solve_detailed(const Instance& inst);
MultiwayCut trivial_solve(const Instance& inst);

struct ApproxOptions {
    double beta_scale = 1.0;
    UtcMode utc_mode = UtcMode::automatic;
    double utc_relax = 0.25;
    int max_grid = 64;  // cap on the geometric D grid length
};

struct PipelineReport {
    MultiwayCut cut;
    double objective = 0.0;
    double D_used = 0.0;  // 0 when the trivial candidate won
    std::size_t mwu_sets = 0;
    std::size_t uncross_steps = 0;
    bool certified = true;
    bool trivial_won = false;
    std::vector<double> d_grid;
};

/// Full pipeline with binary search on D: runs cover/uncross/aggregate for
/// each D in the geometric grid from (trivial objective)^p down to the
/// isolating-cut lower bound, and returns the best cut found; the trivial
/// solution always remains a candidate. Throws UnsupportedP for p = inf.
PipelineReport approx_solve(const Instance& inst, const ApproxOptions& options = {});

}  // namespace lpmwc
