// Copyright 2026 The qaoacost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver for the QAOA cost pipeline.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaoacost/analysis.h"
#include "qaoacost/circuit.h"
#include "qaoacost/costmodel.h"
#include "qaoacost/estimator.h"
#include "qaoacost/graphs.h"
#include "qaoacost/maxsat.h"
#include "qaoacost/optimizer.h"
#include "qaoacost/rng.h"
#include "qaoacost/scheduler.h"
#include "qaoacost/simulator.h"

namespace {

using namespace qaoacost;

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path`, or stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Graph load_graph(const std::string& path) { return parse_graph(read_text(path)); }

// Options shared by every command that builds or runs a QAOA circuit.
struct CircuitArgs {
    std::string graph;
    int p = 4;
    std::vector<double> gammas;
    std::vector<double> betas;

    void add(CLI::App* app, bool need_graph = true) {
        auto* opt = app->add_option("--graph,-g", graph, "Edge-list graph file")->check(CLI::ExistingFile);
        if (need_graph) opt->required();
        app->add_option("--p", p, "QAOA depth")->check(CLI::PositiveNumber);
        app->add_option("--gammas", gammas, "Problem angles, one per layer (default 0)")->delimiter(',');
        app->add_option("--betas", betas, "Mixer angles, one per layer (default 0)")->delimiter(',');
    }

    QaoaParams params() const {
        QaoaParams q{gammas.empty() ? std::vector<double>(p, 0.0) : gammas,
                     betas.empty() ? std::vector<double>(p, 0.0) : betas};
        if (q.depth() != p) throw std::invalid_argument("--gammas/--betas must have --p entries each");
        q.validate();
        return q;
    }
};

struct NoiseArgs {
    double t2_over_tg = 1e4;  // T2 = 100 us at T_G = 10 ns
    double t1_over_tg = 0.0;  // 0 means 2 * T2
    bool noiseless = false;

    void add(CLI::App* app) {
        app->add_option("--t2-ratio", t2_over_tg, "T2 in units of the gate time")->check(CLI::PositiveNumber);
        app->add_option("--t1-ratio", t1_over_tg, "T1 in units of the gate time (default 2*T2)");
        app->add_flag("--noiseless", noiseless, "Disable decoherence");
    }

    NoiseParams params() const {
        if (noiseless) return NoiseParams::ideal();
        NoiseParams np = NoiseParams::from_coherence_ratio(t2_over_tg);
        if (t1_over_tg > 0.0) np.t1 = t1_over_tg;
        np.validate();
        return np;
    }
};

struct HardwareArgs {
    HardwareTimes hw;
    void add(CLI::App* app) {
        app->add_option("--t-prep-measure", hw.prep_plus_measure, "Preparation plus measurement time (s)");
        app->add_option("--t-gate", hw.gate, "Gate time (s)");
    }
};

struct SolveArgs {
    NmConfig nm;
    std::string pipeline = "sampled";
    int realizations = 384;
    unsigned threads = 1;

    void add(CLI::App* app) {
        app->add_option("--restarts", nm.n_restarts, "Nelder-Mead restarts per instance");
        app->add_option("--samples", nm.n_samples, "Measurement samples per evaluation");
        app->add_option("--max-updates", nm.max_updates, "Simplex update cap per run");
        app->add_option("--stall-window", nm.stall_window, "Updates without improvement before stopping (0: 10p)");
        app->add_option("--nm-reflection", nm.reflection);
        app->add_option("--nm-expansion", nm.expansion);
        app->add_option("--nm-contraction", nm.contraction);
        app->add_option("--nm-shrink", nm.shrink);
        app->add_option("--pipeline", pipeline, "Objective: sampled or exact")
            ->check(CLI::IsMember({"sampled", "exact"}));
        app->add_option("--realizations,-R", realizations, "Noise realizations per evaluation")
            ->check(CLI::PositiveNumber);
        app->add_option("--threads", threads, "Worker threads");
    }

    SolveOptions options(int p, const NoiseParams& np, std::uint64_t seed) const {
        SolveOptions o;
        o.p = p;
        o.nm = nm;
        o.pipeline = pipeline == "exact" ? Pipeline::Exact : Pipeline::Sampled;
        if (!np.is_ideal()) o.noise = np;
        o.realizations = realizations;
        o.master_seed = seed;
        o.threads = threads;
        return o;
    }
};

Schedule load_or_build_schedule(const std::string& pdpt, const LogicalCircuit& c, std::uint64_t seed) {
    const GridTopology grid = choose_grid(c.n_qubits);
    Schedule s = pdpt.empty() ? schedule(c, grid, seed) : parse_pdpt(read_text(pdpt));
    const auto problems = validate_schedule(s, c, grid);
    if (!problems.empty()) throw std::invalid_argument("schedule invalid: " + problems.front());
    return s;
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream ss;
    ss << std::setprecision(digits) << v;
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qaoacost: QAOA Max-Cut cost benchmarking"};
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Master seed")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate random 3-regular graphs");
    int gen_n = 8, gen_count = 1;
    std::string gen_kind = "regular3", gen_out = ".";
    gen->add_option("--n", gen_n, "Vertices")->check(CLI::PositiveNumber);
    gen->add_option("--count", gen_count, "Number of graphs")->check(CLI::PositiveNumber);
    gen->add_option("--kind", gen_kind, "regular3 or complete")->check(CLI::IsMember({"regular3", "complete"}));
    gen->add_option("--out", gen_out, "Output directory, or a file path when --count is 1 and it ends in .txt");
    gen->add_option("--seed", seed, "Master seed");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Graph to Max-2-SAT WCNF");
    std::string reduce_graph, reduce_out;
    reduce->add_option("--graph,-g", reduce_graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);
    reduce->add_option("--out,-o", reduce_out, "WCNF output (default stdout)");
    reduce->add_option("--seed", seed, "Master seed");

    // schedule
    auto* sched = app.add_subcommand("schedule", "Compile the QAOA circuit onto a square grid");
    CircuitArgs sched_c;
    std::string sched_out, sched_json, sched_circuit;
    sched_c.add(sched);
    sched->add_option("--out,-o", sched_out, "PDPT output (default stdout)");
    sched->add_option("--json", sched_json, "Also write the schedule as JSON");
    sched->add_option("--circuit-json", sched_circuit, "Also write the logical circuit as JSON");
    sched->add_option("--seed", seed, "Master seed");

    // validate
    auto* val = app.add_subcommand("validate", "Check a PDPT against the circuit of a graph");
    CircuitArgs val_c;
    std::string val_pdpt;
    val_c.add(val);
    val->add_option("--pdpt", val_pdpt, "PDPT file")->required()->check(CLI::ExistingFile);
    val->add_option("--seed", seed, "Master seed");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run a noisy trajectory ensemble");
    CircuitArgs sim_c;
    NoiseArgs sim_noise;
    std::string sim_pdpt, sim_out;
    int sim_r = 384;
    unsigned sim_threads = 1;
    bool sim_values = false;
    sim_c.add(sim);
    sim_noise.add(sim);
    sim->add_option("--pdpt", sim_pdpt, "Use this schedule instead of compiling one")->check(CLI::ExistingFile);
    sim->add_option("--realizations,-R", sim_r, "Noise realizations")->check(CLI::PositiveNumber);
    sim->add_option("--threads", sim_threads, "Worker threads");
    sim->add_flag("--per-realization", sim_values, "Include per-realization cut values");
    sim->add_option("--out,-o", sim_out, "JSON output (default stdout)");
    sim->add_option("--seed", seed, "Master seed");

    // solve
    auto* solve = app.add_subcommand("solve", "Optimize QAOA angles for one instance");
    CircuitArgs solve_c;
    NoiseArgs solve_noise;
    SolveArgs solve_s;
    HardwareArgs solve_hw;
    std::string solve_out;
    solve_c.add(solve);
    solve_noise.add(solve);
    solve_s.add(solve);
    solve_hw.add(solve);
    solve->add_option("--out,-o", solve_out, "Run-record JSON output (default stdout)");
    solve->add_option("--seed", seed, "Master seed");

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep sizes and project hardware wall time");
    std::vector<int> bench_sizes{8};
    int bench_p = 4, bench_instances = 40;
    NoiseArgs bench_noise;
    SolveArgs bench_s;
    HardwareArgs bench_hw;
    std::string bench_out, bench_runs;
    bench->add_option("--sizes", bench_sizes, "Qubit counts")->delimiter(',');
    bench->add_option("--p", bench_p, "QAOA depth")->check(CLI::PositiveNumber);
    bench->add_option("--instances", bench_instances, "Random instances per size")->check(CLI::PositiveNumber);
    bench_noise.add(bench);
    bench_s.add(bench);
    bench_hw.add(bench);
    bench->add_option("--out,-o", bench_out, "Cost CSV output (default stdout)");
    bench->add_option("--runs-dir", bench_runs, "Directory for per-instance run JSON");
    bench->add_option("--seed", seed, "Master seed");

    // baseline
    auto* base = app.add_subcommand("baseline", "Time the brute-force Max-2-SAT solver");
    std::vector<int> base_sizes{8, 10, 12, 14, 16};
    int base_instances = 5;
    std::string base_out;
    base->add_option("--sizes", base_sizes, "Variable counts")->delimiter(',');
    base->add_option("--instances", base_instances, "Instances per size")->check(CLI::PositiveNumber);
    base->add_option("--out,-o", base_out, "Timing CSV output (default stdout)");
    base->add_option("--seed", seed, "Master seed");

    // fit
    auto* fit = app.add_subcommand("fit", "Exponential fits, prediction band and crossover");
    std::string fit_q, fit_c, fit_csv, fit_json;
    double fit_level = 0.95;
    fit->add_option("--quantum", fit_q, "Cost or timing CSV for the quantum series")->required()->check(CLI::ExistingFile);
    fit->add_option("--classical", fit_c, "Timing CSV for the classical series")->required()->check(CLI::ExistingFile);
    fit->add_option("--level", fit_level, "Prediction level")->check(CLI::Range(0.5, 0.9999));
    fit->add_option("--out-csv", fit_csv, "Report CSV (default stdout)");
    fit->add_option("--out-json", fit_json, "Report JSON");
    fit->add_option("--seed", seed, "Master seed");

    // convergence
    auto* conv = app.add_subcommand("convergence", "Running-mean ratio versus noise realizations");
    CircuitArgs conv_c;
    std::vector<double> conv_ratios{500, 10000};
    int conv_seeds = 3, conv_r = 400, conv_restarts = 4;
    std::string conv_out;
    conv_c.add(conv);
    conv->add_option("--t2-ratios", conv_ratios, "T2 / T_G values")->delimiter(',');
    conv->add_option("--seeds", conv_seeds, "Independent ensembles per ratio")->check(CLI::PositiveNumber);
    conv->add_option("--realizations,-R", conv_r, "Largest ensemble size")->check(CLI::PositiveNumber);
    conv->add_option("--restarts", conv_restarts, "Noiseless restarts used to pick angles when none are given");
    conv->add_option("--out,-o", conv_out, "CSV output (default stdout)");
    conv->add_option("--seed", seed, "Master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const bool single = gen_count == 1 && gen_out.size() > 4 && gen_out.ends_with(".txt");
            for (int i = 0; i < gen_count; ++i) {
                const Graph g = gen_kind == "complete"
                                    ? complete_graph(gen_n)
                                    : gen_random_3regular(gen_n, derive_seed(seed, {static_cast<std::uint64_t>(gen_n),
                                                                                    static_cast<std::uint64_t>(i)}));
                const std::string path =
                    single ? gen_out : gen_out + "/graph_n" + std::to_string(gen_n) + "_" + std::to_string(i) + ".txt";
                write_text(path, write_graph(g));
                std::cerr << path << '\n';
            }
        } else if (*reduce) {
            write_text(reduce_out, emit_wcnf(reduce_to_max2sat(load_graph(reduce_graph))));
        } else if (*sched) {
            const Graph g = load_graph(sched_c.graph);
            const auto c = build_qaoa_circuit(g, sched_c.params());
            const auto grid = choose_grid(g.num_vertices());
            const auto s = schedule(c, grid, seed);
            write_text(sched_out, emit_pdpt(s));
            if (!sched_json.empty()) write_text(sched_json, schedule_to_json(s));
            if (!sched_circuit.empty()) write_text(sched_circuit, circuit_to_json(c));
            std::cerr << "grid " << grid.rows << "x" << grid.cols << ", depth " << scheduled_depth(s) << '\n';
        } else if (*val) {
            const Graph g = load_graph(val_c.graph);
            const auto c = build_qaoa_circuit(g, val_c.params());
            const auto s = parse_pdpt(read_text(val_pdpt));
            const auto problems = validate_schedule(s, c, choose_grid(g.num_vertices()));
            for (const auto& p : problems) std::cout << p << '\n';
            std::cout << problems.size() << " violations, depth " << scheduled_depth(s) << '\n';
            return problems.empty() ? 0 : 1;
        } else if (*sim) {
            const Graph g = load_graph(sim_c.graph);
            const auto c = build_qaoa_circuit(g, sim_c.params());
            const auto s = load_or_build_schedule(sim_pdpt, c, derive_seed(seed, {1}));
            const auto cuts = cut_table(g);
            EnsembleOptions eo;
            eo.realizations = sim_r;
            eo.master_seed = seed;
            eo.threads = sim_threads;
            eo.diagonal_observable = &cuts;
            const auto np = sim_noise.params();
            const auto ens = run_noisy_ensemble(s, c, np, eo);
            const auto exact = brute_force_maxcut(g);
            nlohmann::ordered_json j;
            j["n_qubits"] = g.num_vertices();
            j["depth"] = scheduled_depth(s);
            j["realizations"] = ens.realizations;
            j["t1"] = np.is_ideal() ? nlohmann::ordered_json() : nlohmann::ordered_json(np.t1);
            j["t2"] = np.is_ideal() ? nlohmann::ordered_json() : nlohmann::ordered_json(np.t2);
            j["mean_cut"] = ens.observable_mean;
            j["k_max"] = exact.k_max;
            j["approximation_ratio"] = approximation_ratio(ens.observable_mean, exact.k_max);
            j["overlap_with_optima"] = overlap_with_optima(ens.probabilities, exact.optima);
            if (sim_values) j["per_realization_cut"] = ens.observable_values;
            write_text(sim_out, j.dump(1) + "\n");
        } else if (*solve) {
            const Graph g = load_graph(solve_c.graph);
            const auto r = solve_instance(g, solve_s.options(solve_c.p, solve_noise.params(), seed));
            write_text(solve_out, run_records_to_json(r));
            const auto cost = instance_wall_time(r, solve_s.nm.n_samples, solve_hw.hw);
            std::cerr << "depth " << r.depth << ", evals " << r.total_evals << ", ratio " << fixed(r.best_exact_ratio)
                      << ", overlap " << fixed(r.best_overlap) << ", projected " << fixed(cost.wall_time) << " s\n";
        } else if (*bench) {
            std::vector<CostRow> rows;
            const auto np = bench_noise.params();
            for (int n : bench_sizes) {
                std::vector<InstanceCost> costs;
                for (int i = 0; i < bench_instances; ++i) {
                    const std::uint64_t gs =
                        derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)});
                    const Graph g = gen_random_3regular(n, gs);
                    const auto r = solve_instance(g, bench_s.options(bench_p, np, mix64(gs)));
                    costs.push_back(instance_wall_time(r, bench_s.nm.n_samples, bench_hw.hw));
                    if (!bench_runs.empty()) {
                        write_text(bench_runs + "/run_n" + std::to_string(n) + "_" + std::to_string(i) + ".json",
                                   run_records_to_json(r));
                    }
                    std::cerr << "N=" << n << " instance " << i << ": evals " << r.total_evals << ", depth "
                              << r.depth << ", " << fixed(costs.back().wall_time) << " s\n";
                }
                rows.push_back({n, bench_p, aggregate(costs)});
            }
            write_text(bench_out, cost_csv(rows));
        } else if (*base) {
            std::vector<TimingRow> rows;
            for (int n : base_sizes) {
                double total = 0.0;
                for (int i = 0; i < base_instances; ++i) {
                    const auto f = reduce_to_max2sat(gen_random_3regular(
                        n, derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)})));
                    const auto t0 = std::chrono::steady_clock::now();
                    volatile int best = brute_force_max2sat(f);
                    (void)best;
                    total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                }
                rows.push_back({static_cast<double>(n), total / base_instances, "brute-force-max2sat"});
            }
            write_text(base_out, timing_csv(rows));
        } else if (*fit) {
            const auto q = parse_timing_csv(read_text(fit_q));
            const auto c = parse_timing_csv(read_text(fit_c));
            const Series qs{q.empty() ? "quantum" : q.front().label, points_of(q)};
            const Series cs{c.empty() ? "classical" : c.front().label, points_of(c)};
            const auto report = make_report(qs, cs, fit_level);
            write_text(fit_csv, report.csv);
            if (!fit_json.empty()) write_text(fit_json, report.json);
        } else if (*conv) {
            const Graph g = load_graph(conv_c.graph);
            QaoaParams params = conv_c.params();
            if (conv_c.gammas.empty() && conv_c.betas.empty()) {
                // No angles given: optimize them on the noiseless exact objective.
                SolveOptions o;
                o.p = conv_c.p;
                o.pipeline = Pipeline::Exact;
                o.nm.n_restarts = conv_restarts;
                o.master_seed = seed;
                params = solve_instance(g, o).best().best_params();
            }
            const auto c = build_qaoa_circuit(g, params);
            const auto s = schedule(c, choose_grid(g.num_vertices()), derive_seed(seed, {1}));
            const auto cuts = cut_table(g);
            const int k_max = brute_force_maxcut(g).k_max;
            std::ostringstream out;
            out << "t2_ratio,seed,R,running_ratio\n" << std::setprecision(10);
            for (double ratio : conv_ratios) {
                for (int k = 0; k < conv_seeds; ++k) {
                    EnsembleOptions eo;
                    eo.realizations = conv_r;
                    eo.master_seed = derive_seed(seed, {2, static_cast<std::uint64_t>(k)});
                    eo.diagonal_observable = &cuts;
                    const auto ens = run_noisy_ensemble(s, c, NoiseParams::from_coherence_ratio(ratio), eo);
                    double sum = 0.0;
                    for (int r = 0; r < conv_r; ++r) {
                        sum += ens.observable_values[r];
                        out << ratio << ',' << k << ',' << r + 1 << ',' << sum / (r + 1) / k_max << '\n';
                    }
                }
            }
            write_text(conv_out, out.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "qaoacost: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
