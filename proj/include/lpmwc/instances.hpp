#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpmwc/graph.hpp"

namespace lpmwc {

enum class GadgetKind { star, fig1, bisection, three_partition, mskp, random_graph };

std::string gadget_kind_name(GadgetKind kind);

/// Provenance of a generated instance: the construction parameters, echoed
/// into instance-file comments, plus the decision threshold for the
/// hardness gadgets. Thresholds are recomputable from the parameters alone.
struct GadgetMeta {
    GadgetKind kind;
    std::vector<std::pair<std::string, double>> params;
    bool has_threshold = false;
    double threshold = 0.0;

    double param(const std::string& name) const;
};

struct GeneratedInstance {
    Instance instance;
    GadgetMeta meta;
};

/// Unit star with k leaf terminals around one center (center id = k).
GeneratedInstance gen_star(int k, double p = 2.0);

/// The disconnected-optimum example: terminals {u1, v1..v4}, v-clique of
/// weight a = 8^(p/(p-1)), unit spokes from u1 and u2 to every v, no u1-u2
/// edge. For every p > 1 the optimum groups u2 with u1 and that part is
/// disconnected. Vertex ids: u1=0, u2=1, v1..v4=2..5.
GeneratedInstance gen_fig1(double p);

/// Bisection gadget: adds terminals u, d, l, r (ids n..n+3) to a
/// unit-weight graph on an even number of vertices; v-to-terminal edges of
/// weight a = max{1, 8n^3/(p-1), 2C+1}, u-d edge of weight
/// b = 1 + max{1, (2an+C)^(p/(p-1)), 3an}. The meta carries the decision
/// threshold (2(b+an)^p + 2(2an+C)^p)^(1/p).
GeneratedInstance gen_bisection(const Graph& g, long long C, double p);

double bisection_threshold(int n, long long C, double a, double b, double p);

/// 3-partition gadget: for each of the 3m weights, a K4 block whose three
/// x-terminals form a triangle of weight d*B - a_i/6 with spokes a_i/3 to
/// the block vertex v_i, where d = (12m+12)^(1/(p-1)); plus m isolated
/// terminals. Singleton x cuts come out to exactly 2dB and the meta carries
/// the decision threshold (9m(2dB)^p + mB^p)^(1/p).
/// Vertex ids: block i at 4i..4i+3 (x^1, x^2, x^3, v), t_j at 12m+j.
GeneratedInstance gen_3partition(const std::vector<double>& weights, double B, double p);

double three_partition_threshold(int m, double d, double B, double p);

/// Equi-partitioning reduction: k new terminals (ids n..n+k-1), each joined
/// to every original vertex with weight B/n.
GeneratedInstance gen_mskp(const Graph& g, int k, double B, double p = 2.0);

struct MskpExtraction {
    std::vector<VertexSet> parts;  // restriction of the k parts to original V
    double sum_of_cuts = 0.0;      // sum of w(delta_G(P_i)) in the original graph
    int max_part_size = 0;
};

MskpExtraction mskp_extract(const Graph& original, const MultiwayCut& cut, int k);

struct RandomSpec {
    int n = 8;
    int k = 3;
    double density = 0.5;
    double wmin = 1.0;
    double wmax = 10.0;
    std::uint64_t seed = 0;
    double p = 2.0;
};

/// Seeded random instance; same spec always yields the same bytes.
GeneratedInstance gen_random(const RandomSpec& spec);

Graph path_graph(int n);
Graph complete_graph(int n);

}  // namespace lpmwc
