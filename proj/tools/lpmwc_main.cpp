#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpmwc/approx.hpp"
#include "lpmwc/errors.hpp"
#include "lpmwc/exact.hpp"
#include "lpmwc/instances.hpp"
#include "lpmwc/io.hpp"
#include "lpmwc/relax.hpp"

using nlohmann::json;
using namespace lpmwc;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json partition_json(const Instance& inst, const MultiwayCut& cut) {
    json parts = json::array();
    for (const auto& set : cut.parts(inst)) parts.push_back(set.to_vector());
    return parts;
}

json instance_summary(const InstanceFile& file) {
    json j;
    j["n"] = file.instance.n();
    j["m"] = file.instance.graph.edges.size();
    j["k"] = file.instance.k();
    j["p"] = format_p(file.instance.p);
    if (auto t = file.threshold()) j["threshold"] = *t;
    return j;
}

double parse_p_flag(const std::string& text) {
    if (text == "inf") return kInfiniteP;
    double p = 0.0;
    try {
        p = std::stod(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent '" + text + "'");
    }
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
    return p;
}

UtcMode parse_utc_mode(const std::string& text) {
    if (text == "auto") return UtcMode::automatic;
    if (text == "exact") return UtcMode::exact;
    if (text == "heuristic") return UtcMode::heuristic;
    throw std::invalid_argument("bad utc mode '" + text + "' (auto|exact|heuristic)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

Graph base_graph(const std::string& graph_file, int path_n, int complete_n) {
    int picked = int(!graph_file.empty()) + int(path_n > 0) + int(complete_n > 0);
    if (picked != 1)
        throw std::invalid_argument("pick exactly one base graph: --graph-file, --path-n or --complete-n");
    if (!graph_file.empty()) return load_instance(graph_file).instance.graph;
    if (path_n > 0) return path_graph(path_n);
    return complete_graph(complete_n);
}

struct AlgoRun {
    bool ran = false;
    std::string skipped_reason;
    double objective = 0.0;
    MultiwayCut cut;
    json details;
};

AlgoRun run_exact(const Instance& inst, std::uint64_t budget) {
    AlgoRun run;
    auto start = std::chrono::steady_clock::now();
    ExactReport report = solve_exact(inst, budget);
    run.ran = true;
    run.objective = report.objective;
    run.cut = report.optimum;
    run.details["objective"] = report.objective;
    run.details["states_explored"] = report.states_explored;
    run.details["time_ms"] = ms_since(start);
    return run;
}

AlgoRun run_trivial(const Instance& inst) {
    AlgoRun run;
    auto start = std::chrono::steady_clock::now();
    TrivialReport report = trivial_solve_detailed(inst);
    run.ran = true;
    run.objective = report.objective;
    run.cut = report.cut;
    run.details["objective"] = report.objective;
    run.details["isolating_cut_values"] = report.isolating_values;
    run.details["time_ms"] = ms_since(start);
    return run;
}

AlgoRun run_approx(const Instance& inst, double beta_scale, UtcMode utc_mode) {
    AlgoRun run;
    ApproxOptions options;
    options.beta_scale = beta_scale;
    options.utc_mode = utc_mode;
    auto start = std::chrono::steady_clock::now();
    PipelineReport report = approx_solve(inst, options);
    run.ran = true;
    run.objective = report.objective;
    run.cut = report.cut;
    run.details["objective"] = report.objective;
    run.details["certified"] = report.certified;
    run.details["trivial_won"] = report.trivial_won;
    run.details["d_grid"] = report.d_grid;
    run.details["d_used"] = report.D_used;
    run.details["mwu_sets"] = report.mwu_sets;
    run.details["uncross_steps"] = report.uncross_steps;
    run.details["time_ms"] = ms_since(start);
    return run;
}

int cmd_solve(const std::string& instance_path, const std::string& algo, std::uint64_t budget, double beta_scale,
              const std::string& utc, std::uint64_t seed, const std::string& partition_out,
              const std::string& out_path) {
    InstanceFile file = load_instance(instance_path);
    const Instance& inst = file.instance;
    const UtcMode utc_mode = parse_utc_mode(utc);
    auto start = std::chrono::steady_clock::now();

    json report;
    report["command"] = "solve";
    report["algorithm"] = algo;
    report["instance"] = instance_summary(file);
    report["seed"] = seed;

    std::string best_name;
    AlgoRun best;
    auto take_best = [&](const std::string& name, const AlgoRun& run) {
        if (!run.ran) return;
        if (best_name.empty() || run.objective < best.objective) {
            best_name = name;
            best = run;
        }
    };

    if (algo == "exact") {
        take_best("exact", run_exact(inst, budget));
    } else if (algo == "trivial") {
        take_best("trivial", run_trivial(inst));
    } else if (algo == "approx") {
        take_best("approx", run_approx(inst, beta_scale, utc_mode));
    } else if (algo == "compare") {
        json algos;
        AlgoRun exact;
        try {
            exact = run_exact(inst, budget);
        } catch (const BudgetExceeded& e) {
            exact.skipped_reason = e.what();
        }
        algos["exact"] = exact.ran ? exact.details : json{{"skipped", exact.skipped_reason}};
        AlgoRun trivial = run_trivial(inst);
        algos["trivial"] = trivial.details;
        AlgoRun approx;
        if (inst.has_finite_p()) {
            approx = run_approx(inst, beta_scale, utc_mode);
            algos["approx"] = approx.details;
        } else {
            approx.skipped_reason = "p = inf";
            algos["approx"] = json{{"skipped", approx.skipped_reason}};
        }
        if (exact.ran) {
            if (trivial.ran) algos["trivial"]["ratio_vs_oracle"] = trivial.objective / std::max(exact.objective, 1e-300);
            if (approx.ran) algos["approx"]["ratio_vs_oracle"] = approx.objective / std::max(exact.objective, 1e-300);
        }
        report["algorithms"] = algos;
        take_best("exact", exact);
        take_best("trivial", trivial);
        take_best("approx", approx);
    } else {
        throw std::invalid_argument("bad algorithm '" + algo + "' (exact|trivial|approx|compare)");
    }

    report["best_algorithm"] = best_name;
    report["objective"] = best.objective;
    report["per_part_cuts"] = per_part_cuts(inst, best.cut);
    report["partition"] = partition_json(inst, best.cut);
    for (auto& [key, value] : best.details.items())
        if (!report.contains(key)) report[key] = value;
    report["total_time_ms"] = ms_since(start);

    if (!partition_out.empty()) emit(serialize_partition(inst, best.cut), partition_out);
    emit(report.dump(2) + "\n", out_path);
    return 0;
}

int cmd_eval(const std::string& instance_path, const std::string& partition_path, const std::string& out_path) {
    InstanceFile file = load_instance(instance_path);
    const Instance& inst = file.instance;
    PartitionFile partition = load_partition(partition_path);

    json report;
    report["command"] = "eval";
    report["instance"] = instance_summary(file);
    if (partition.fractional) {
        FractionalAssignment x = partition_to_fractional(inst, partition);
        double objective = cp_objective(inst, x);  // throws InfeasibleAssignment when infeasible
        report["kind"] = "fractional";
        report["feasible"] = true;
        report["objective"] = objective;
    } else {
        MultiwayCut cut = partition_to_cut(inst, partition);
        report["kind"] = "integral";
        report["objective"] = lp_objective(inst, cut);
        report["per_part_cuts"] = per_part_cuts(inst, cut);
        json conn = json::array();
        for (bool c : part_connectivity(inst, cut)) conn.push_back(c);
        report["part_connected"] = conn;
        report["partition"] = partition_json(inst, cut);
    }
    emit(report.dump(2) + "\n", out_path);
    return 0;
}

int cmd_gap(int k, const std::string& p_text, const std::string& out_path) {
    double p = parse_p_flag(p_text);
    StarGap gap = star_gap(k, p);
    json report;
    report["command"] = "gap";
    report["k"] = k;
    report["p"] = format_p(p);
    report["integral_opt"] = gap.integral_opt;
    report["fractional_value"] = gap.fractional_value;
    report["gap_lower_bound"] = gap.gap_lower_bound;
    report["ratio"] = gap.ratio;
    report["ratio_at_least_bound"] = gap.ratio >= gap.gap_lower_bound * (1.0 - kRelTol);
    emit(report.dump(2) + "\n", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lpmwc: minimum lp-norm multiway cut toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string kind;
    gen->add_option("kind", kind, "star|fig1|bisection|3partition|mskp|random")->required();
    int k = 4;
    std::string p_text = "2";
    long long C = 0;
    double B = 20.0;
    std::vector<double> weights;
    std::string graph_file;
    int path_n = 0, complete_n = 0;
    int rn = 8;
    double density = 0.5, wmin = 1.0, wmax = 10.0;
    std::uint64_t seed = 0;
    std::string out_path;
    gen->add_option("--k", k, "terminal count (star, mskp, random)");
    gen->add_option("--p", p_text, "norm exponent (finite real or inf)");
    gen->add_option("--C", C, "bisection cut bound");
    gen->add_option("--B", B, "3partition/mskp bound");
    gen->add_option("--weights", weights, "3partition weights a_1..a_3m")->delimiter(',');
    gen->add_option("--graph-file", graph_file, "base graph from an instance file (bisection, mskp)");
    gen->add_option("--path-n", path_n, "unit path base graph on n vertices");
    gen->add_option("--complete-n", complete_n, "unit complete base graph on n vertices");
    gen->add_option("--n", rn, "random: vertex count");
    gen->add_option("--density", density, "random: edge probability");
    gen->add_option("--wmin", wmin, "random: minimum weight");
    gen->add_option("--wmax", wmax, "random: maximum weight");
    gen->add_option("--seed", seed, "random: seed");
    gen->add_option("--out", out_path, "write to file instead of stdout");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance, reporting JSON");
    std::string instance_path;
    std::string algo = "compare";
    std::uint64_t budget = kDefaultExactBudget;
    double beta_scale = 1.0;
    std::string utc = "auto";
    std::uint64_t solve_seed = 0;
    std::string partition_out;
    std::string solve_out;
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--algo", algo, "exact|trivial|approx|compare");
    solve->add_option("--budget", budget, "exact-state budget");
    solve->add_option("--beta", beta_scale, "scale on the covering-stage beta");
    solve->add_option("--utc", utc, "auto|exact|heuristic");
    solve->add_option("--seed", solve_seed, "echoed in the report (solvers are deterministic)");
    solve->add_option("--partition-out", partition_out, "also write the winning partition file");
    solve->add_option("--out", solve_out, "write the report to a file");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a partition or fractional assignment");
    std::string eval_instance, eval_partition, eval_out;
    eval->add_option("instance", eval_instance, "instance file")->required();
    eval->add_option("partition", eval_partition, "partition file")->required();
    eval->add_option("--out", eval_out, "write the report to a file");

    // gap
    auto* gap = app.add_subcommand("gap", "star-graph integrality gap report");
    int gap_k = 4;
    std::string gap_p = "2";
    std::string gap_out;
    gap->add_option("--k", gap_k, "leaf count, k >= 3")->required();
    gap->add_option("--p", gap_p, "finite norm exponent");
    gap->add_option("--out", gap_out, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            double p = parse_p_flag(p_text);
            GeneratedInstance generated;
            if (kind == "star") {
                generated = gen_star(k, p);
            } else if (kind == "fig1") {
                generated = gen_fig1(p);
            } else if (kind == "bisection") {
                generated = gen_bisection(base_graph(graph_file, path_n, complete_n), C, p);
            } else if (kind == "3partition") {
                generated = gen_3partition(weights, B, p);
            } else if (kind == "mskp") {
                generated = gen_mskp(base_graph(graph_file, path_n, complete_n), k, B, p);
            } else if (kind == "random") {
                RandomSpec spec;
                spec.n = rn;
                spec.k = k;
                spec.density = density;
                spec.wmin = wmin;
                spec.wmax = wmax;
                spec.seed = seed;
                spec.p = p;
                generated = gen_random(spec);
            } else {
                throw std::invalid_argument("unknown generator kind '" + kind + "'");
            }
            emit(serialize_instance(make_instance_file(generated)), out_path);
            return 0;
        }
        if (*solve) return cmd_solve(instance_path, algo, budget, beta_scale, utc, solve_seed, partition_out, solve_out);
        if (*eval) return cmd_eval(eval_instance, eval_partition, eval_out);
        if (*gap) return cmd_gap(gap_k, gap_p, gap_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(e.code());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(ErrorCode::unsupported);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
