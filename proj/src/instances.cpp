#include "lpmwc/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lpmwc/errors.hpp"

namespace lpmwc {

std::string gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::star: return "star";
        case GadgetKind::fig1: return "fig1";
        case GadgetKind::bisection: return "bisection";
        case GadgetKind::three_partition: return "3partition";
        case GadgetKind::mskp: return "mskp";
        case GadgetKind::random_graph: return "random";
    }
    return "?";
}

double GadgetMeta::param(const std::string& name) const {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw std::out_of_range("gadget parameter not present: " + name);
}

namespace {

void require_finite_p_above_1(double p) {
    if (!(p > 1.0) || p == kInfiniteP) throw InvalidP("gadget requires finite p > 1");
}

}  // namespace

GeneratedInstance gen_star(int k, double p) {
    if (k < 3) throw std::invalid_argument("gen_star requires k >= 3");
    if (!(p >= 1.0)) throw InvalidP("gen_star requires p >= 1");
    GeneratedInstance out;
    out.instance.graph = Graph(k + 1);
    for (int i = 0; i < k; ++i) {
        out.instance.graph.add_edge(i, k, 1.0);
        out.instance.terminals.push_back(i);
    }
    out.instance.p = p;
    out.meta.kind = GadgetKind::star;
    out.meta.params = {{"k", double(k)}};
    return out;
}

GeneratedInstance gen_fig1(double p) {
    require_finite_p_above_1(p);
    const double a = std::pow(8.0, p / (p - 1.0));

    GeneratedInstance out;
    Graph& g = out.instance.graph;
    g = Graph(6);
    const int u1 = 0, u2 = 1;
    const int v[4] = {2, 3, 4, 5};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(v[i], v[j], a);
    for (int i = 0; i < 4; ++i) g.add_edge(u2, v[i], 1.0);
    for (int i = 0; i < 4; ++i) g.add_edge(u1, v[i], 1.0);

    out.instance.terminals = {u1, v[0], v[1], v[2], v[3]};
    out.instance.p = p;
    out.meta.kind = GadgetKind::fig1;
    out.meta.params = {{"p", p}, {"a", a}};
    return out;
}

double bisection_threshold(int n, long long C, double a, double b, double p) {
    const double heavy = b + a * double(n);
    const double light = 2.0 * a * double(n) + double(C);
    const double values[4] = {heavy, heavy, light, light};
    return lp_norm(values, p);
}

GeneratedInstance gen_bisection(const Graph& g, long long C, double p) {
    require_finite_p_above_1(p);
    if (g.n % 2 != 0) throw OddN("gen_bisection requires an even number of vertices");
    for (const auto& e : g.edges)
        if (e.w != 1.0) throw ConstraintViolation("gen_bisection requires unit weights on the input graph");

    const int n = g.n;
    const double a = std::max({1.0, 8.0 * double(n) * double(n) * double(n) / (p - 1.0), 2.0 * double(C) + 1.0});
    const double b =
        1.0 + std::max({1.0, std::pow(2.0 * a * double(n) + double(C), p / (p - 1.0)), 3.0 * a * double(n)});

    GeneratedInstance out;
    Graph& gg = out.instance.graph;
    gg = Graph(n + 4);
    const int u = n, d = n + 1, l = n + 2, r = n + 3;
    for (const auto& e : g.edges) gg.add_edge(e.u, e.v, e.w);
    gg.add_edge(u, d, b);
    for (int v = 0; v < n; ++v) {
        gg.add_edge(v, u, a);
        gg.add_edge(v, d, a);
        gg.add_edge(v, l, a);
        gg.add_edge(v, r, a);
    }
    out.instance.terminals = {u, d, l, r};
    out.instance.p = p;
    out.meta.kind = GadgetKind::bisection;
    out.meta.params = {{"n", double(n)}, {"C", double(C)}, {"p", p}, {"a", a}, {"b", b}};
    out.meta.has_threshold = true;
    out.meta.threshold = bisection_threshold(n, C, a, b, p);
    return out;
}

double three_partition_threshold(int m, double d, double B, double p) {
    std::vector<double> values;
    values.reserve(std::size_t(10) * m);
    for (int i = 0; i < 9 * m; ++i) values.push_back(2.0 * d * B);
    for (int j = 0; j < m; ++j) values.push_back(B);
    return lp_norm(values, p);
}

GeneratedInstance gen_3partition(const std::vector<double>& weights, double B, double p) {
    require_finite_p_above_1(p);
    if (weights.empty() || weights.size() % 3 != 0)
        throw ConstraintViolation("gen_3partition needs 3m weights");
    const int m = int(weights.size()) / 3;
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!near(sum, double(m) * B))
        throw ConstraintViolation("gen_3partition: weights must sum to m*B");
    for (double w : weights)
        if (!(w > B / 4.0 && w < B / 2.0))
            throw ConstraintViolation("gen_3partition: every weight must lie strictly between B/4 and B/2");

    const double d = std::pow(12.0 * double(m) + 12.0, 1.0 / (p - 1.0));

    GeneratedInstance out;
    Graph& g = out.instance.graph;
    const int blocks = 3 * m;
    g = Graph(4 * blocks + m);
    for (int i = 0; i < blocks; ++i) {
        const int x1 = 4 * i, x2 = 4 * i + 1, x3 = 4 * i + 2, v = 4 * i + 3;
        const double triangle = d * B - weights[i] / 6.0;
        const double spoke = weights[i] / 3.0;
        g.add_edge(x1, x2, triangle);
        g.add_edge(x1, x3, triangle);
        g.add_edge(x2, x3, triangle);
        g.add_edge(x1, v, spoke);
        g.add_edge(x2, v, spoke);
        g.add_edge(x3, v, spoke);
        out.instance.terminals.push_back(x1);
        out.instance.terminals.push_back(x2);
        out.instance.terminals.push_back(x3);
    }
    for (int j = 0; j < m; ++j) out.instance.terminals.push_back(4 * blocks + j);

    out.instance.p = p;
    out.meta.kind = GadgetKind::three_partition;
    out.meta.params = {{"m", double(m)}, {"B", B}, {"p", p}, {"d", d}};
    out.meta.has_threshold = true;
    out.meta.threshold = three_partition_threshold(m, d, B, p);
    return out;
}

GeneratedInstance gen_mskp(const Graph& g, int k, double B, double p) {
    if (k < 2) throw std::invalid_argument("gen_mskp requires k >= 2");
    if (!(B > 0.0)) throw std::invalid_argument("gen_mskp requires B > 0");
    if (g.n < 1) throw std::invalid_argument("gen_mskp requires a nonempty graph");
    if (!(p >= 1.0)) throw InvalidP("gen_mskp requires p >= 1");

    const int n = g.n;
    GeneratedInstance out;
    Graph& gg = out.instance.graph;
    gg = Graph(n + k);
    for (const auto& e : g.edges) gg.add_edge(e.u, e.v, e.w);
    const double w = B / double(n);
    for (int i = 0; i < k; ++i) {
        out.instance.terminals.push_back(n + i);
        for (int v = 0; v < n; ++v) gg.add_edge(n + i, v, w);
    }
    out.instance.p = p;
    out.meta.kind = GadgetKind::mskp;
    out.meta.params = {{"n", double(n)}, {"k", double(k)}, {"B", B}, {"p", p}};
    return out;
}

MskpExtraction mskp_extract(const Graph& original, const MultiwayCut& cut, int k) {
    const int n = original.n;
    if (int(cut.part.size()) != n + k) throw std::invalid_argument("mskp_extract: assignment size mismatch");
    MskpExtraction out;
    out.parts.assign(k, VertexSet(n));
    for (int v = 0; v < n; ++v) out.parts[cut.part[v]].insert(v);
    for (const auto& part : out.parts) {
        out.sum_of_cuts += cut_weight(original, part);
        out.max_part_size = std::max(out.max_part_size, part.count());
    }
    return out;
}

namespace {

// Standardized mt19937_64 output keeps generated instances byte-identical
// across platforms for a fixed seed.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double unit() { return double(engine() >> 11) * 0x1.0p-53; }  // [0, 1)
    std::uint64_t below(std::uint64_t n) { return engine() % n; }
};

}  // namespace

GeneratedInstance gen_random(const RandomSpec& spec) {
    if (spec.k < 2 || spec.k > spec.n) throw std::invalid_argument("gen_random requires 2 <= k <= n");
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw std::invalid_argument("density must be in [0, 1]");
    if (!(spec.wmin >= 0.0 && spec.wmax >= spec.wmin)) throw std::invalid_argument("bad weight range");
    if (!(spec.p >= 1.0)) throw InvalidP("gen_random requires p >= 1");

    Rng rng(spec.seed);
    GeneratedInstance out;
    out.instance.graph = Graph(spec.n);
    for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) {
            if (rng.unit() < spec.density) {
                double w = spec.wmin + rng.unit() * (spec.wmax - spec.wmin);
                out.instance.graph.add_edge(u, v, w);
            }
        }
    }
    std::vector<int> ids(spec.n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < spec.k; ++i) {
        int j = i + int(rng.below(std::uint64_t(spec.n - i)));
        std::swap(ids[i], ids[j]);
    }
    out.instance.terminals.assign(ids.begin(), ids.begin() + spec.k);
    std::sort(out.instance.terminals.begin(), out.instance.terminals.end());
    out.instance.p = spec.p;
    out.meta.kind = GadgetKind::random_graph;
    out.meta.params = {{"n", double(spec.n)},       {"k", double(spec.k)}, {"density", spec.density},
                       {"wmin", spec.wmin},         {"wmax", spec.wmax},   {"seed", double(spec.seed)},
                       {"p", spec.p}};
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1.0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1.0);
    return g;
}

}  // namespace lpmwc
