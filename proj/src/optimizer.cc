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

#include "qaoacost/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qaoacost/estimator.h"

namespace qaoacost {

void NmConfig::validate() const {
    if (!(reflection > 0.0) || !(expansion > reflection) || !(contraction > 0.0 && contraction < 1.0) ||
        !(shrink > 0.0 && shrink < 1.0)) {
        throw std::invalid_argument("NmConfig: coefficients must satisfy 0 < reflection < expansion, "
                                    "0 < contraction < 1, 0 < shrink < 1");
    }
    if (max_updates < 1 || stall_window < 0 || n_restarts < 1 || n_samples < 1) {
        throw std::invalid_argument("NmConfig: counts must be positive");
    }
}

const char* termination_name(Termination t) {
    return t == Termination::Stalled ? "stalled" : "max_updates";
}

namespace {

bool affinely_independent(const Simplex& s) {
    const std::size_t dim = s.front().size();
    std::vector<std::vector<double>> m;
    double scale = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<double> row(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            row[k] = s[i][k] - s[0][k];
            scale = std::max(scale, std::abs(row[k]));
        }
        m.push_back(std::move(row));
    }
    if (scale == 0.0) return false;
    const double tol = 1e-12 * scale;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col; r < dim; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        if (std::abs(m[pivot][col]) <= tol) return false;
        std::swap(m[pivot], m[col]);
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < dim; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return true;
}

// a + t * (b - a)
std::vector<double> along(const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + t * (b[k] - a[k]);
    return out;
}

}  // namespace

RunRecord nelder_mead(const Objective& objective, Simplex simplex, const NmConfig& cfg, int stall_window) {
    cfg.validate();
    if (simplex.empty() || stall_window < 1) throw std::invalid_argument("nelder_mead: empty simplex or bad stall window");
    const std::size_t dim = simplex.front().size();
    if (dim == 0 || simplex.size() != dim + 1 ||
        std::any_of(simplex.begin(), simplex.end(), [&](const auto& v) { return v.size() != dim; })) {
        throw std::invalid_argument("nelder_mead: simplex must have dim+1 vertices of equal dimension");
    }
    if (!affinely_independent(simplex)) throw std::invalid_argument("nelder_mead: degenerate simplex");

    RunRecord rec;
    auto eval = [&](const std::vector<double>& x) {
        ++rec.n_function_evals;
        return objective(x);
    };
    std::vector<double> values(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(simplex.size());
    std::iota(order.begin(), order.end(), 0);
    // Descending by value; stable so an equal newcomer never displaces the incumbent.
    auto sort_vertices = [&] {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    };
    sort_vertices();
    rec.value_trace.push_back(values[order.front()]);

    int since_improvement = 0;
    rec.termination = Termination::MaxUpdates;
    while (rec.n_updates < cfg.max_updates) {
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];
        const double previous_best = values[best];

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k];
        }
        for (auto& v : centroid) v /= static_cast<double>(dim);

        auto replace_worst = [&](std::vector<double> x, double fx) {
            simplex[worst] = std::move(x);
            values[worst] = fx;
        };

        auto reflected = along(centroid, simplex[worst], -cfg.reflection);
        const double fr = eval(reflected);
        bool do_shrink = false;
        if (fr > values[best]) {
            auto expanded = along(centroid, simplex[worst], -cfg.expansion);
            const double fe = eval(expanded);
            if (fe > fr) {
                replace_worst(std::move(expanded), fe);
            } else {
                replace_worst(std::move(reflected), fr);
            }
        } else if (fr > values[second_worst]) {
            replace_worst(std::move(reflected), fr);
        } else if (fr > values[worst]) {
            auto contracted = along(centroid, reflected, cfg.contraction);
            const double fc = eval(contracted);
            if (fc >= fr) {
                replace_worst(std::move(contracted), fc);
            } else {
                do_shrink = true;
            }
        } else {
            auto contracted = along(centroid, simplex[worst], cfg.contraction);
            const double fc = eval(contracted);
            if (fc > values[worst]) {
                replace_worst(std::move(contracted), fc);
            } else {
                do_shrink = true;
            }
        }
        if (do_shrink) {
            for (std::size_t i = 1; i < order.size(); ++i) {
                const std::size_t v = order[i];
                simplex[v] = along(simplex[best], simplex[v], cfg.shrink);
                values[v] = eval(simplex[v]);
            }
        }
        ++rec.n_updates;
        sort_vertices();
        // The incumbent sits at order.front() unless strictly beaten.
        if (values[order.front()] > previous_best) {
            since_improvement = 0;
        } else {
            ++since_improvement;
        }
        rec.value_trace.push_back(values[order.front()]);
        if (since_improvement >= stall_window) {
            rec.termination = Termination::Stalled;
            break;
        }
    }
    rec.best_point = simplex[order.front()];
    rec.best_value = values[order.front()];
    return rec;
}

Simplex random_initial_simplex(int p, Rng& rng, double offset) {
    if (p < 1) throw std::invalid_argument("random_initial_simplex: p must be >= 1");
    std::uniform_real_distribution<double> gamma(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> beta(0.0, std::numbers::pi);
    std::vector<double> base(2 * p);
    for (int l = 0; l < p; ++l) base[l] = gamma(rng);
    for (int l = 0; l < p; ++l) base[p + l] = beta(rng);
    Simplex s{base};
    for (int k = 0; k < 2 * p; ++k) {
        auto v = base;
        v[k] += offset;
        s.push_back(std::move(v));
    }
    return s;
}

namespace {

enum StreamTag : std::uint64_t { kScheduleStream = 1, kSimplexStream, kNoiseStream, kSampleStream, kDiagnosticStream };

}  // namespace

InstanceSolveResult solve_instance(const Graph& g, const SolveOptions& opts) {
    opts.nm.validate();
    if (opts.p < 1) throw std::invalid_argument("solve_instance: p must be >= 1");
    if (opts.realizations < 1) throw std::invalid_argument("solve_instance: realizations must be >= 1");
    const NoiseParams noise = opts.noise.value_or(NoiseParams::ideal());
    noise.validate();
    const int realizations = noise.is_ideal() ? 1 : opts.realizations;

    InstanceSolveResult result;
    const MaxCutSolution exact = brute_force_maxcut(g);
    result.k_max = exact.k_max;
    result.grid = choose_grid(g.num_vertices());
    // The schedule depends on the circuit structure only, not on the angles.
    QaoaParams zero{std::vector<double>(opts.p, 0.0), std::vector<double>(opts.p, 0.0)};
    result.schedule = schedule(build_qaoa_circuit(g, zero), result.grid,
                               derive_seed(opts.master_seed, {kScheduleStream}));
    result.depth = scheduled_depth(result.schedule);
    const auto cuts = cut_table(g);

    auto evaluate = [&](std::span<const double> x, std::uint64_t run, std::uint64_t call) {
        const auto circuit = build_qaoa_circuit(g, QaoaParams::from_vector(x));
        EnsembleOptions eo;
        eo.realizations = realizations;
        eo.master_seed = derive_seed(opts.master_seed, {kNoiseStream, run, call});
        eo.diagonal_observable = &cuts;
        const auto ens = run_noisy_ensemble(result.schedule, circuit, noise, eo);
        if (opts.pipeline == Pipeline::Exact) return ens.observable_mean;
        Rng rng = make_rng(opts.master_seed, {kSampleStream, run, call});
        const auto samples = measure_samples(ens.probabilities, opts.nm.n_samples, rng);
        return estimate_cut(samples, g).mean_cut;
    };

    const int stall = opts.nm.stall_updates(opts.p);
    result.runs.resize(opts.nm.n_restarts);
    auto do_run = [&](int r) {
        Rng rng = make_rng(opts.master_seed, {kSimplexStream, static_cast<std::uint64_t>(r)});
        std::uint64_t calls = 0;
        const Objective objective = [&](std::span<const double> x) {
            return evaluate(x, static_cast<std::uint64_t>(r), calls++);
        };
        result.runs[r] = nelder_mead(objective, random_initial_simplex(opts.p, rng), opts.nm, stall);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(opts.nm.n_restarts)));
    if (threads == 1) {
        for (int r = 0; r < opts.nm.n_restarts; ++r) do_run(r);
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (int r = next++; r < opts.nm.n_restarts; r = next++) do_run(r);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    for (int r = 0; r < opts.nm.n_restarts; ++r) {
        result.total_evals += result.runs[r].n_function_evals;
        if (result.runs[r].best_value > result.runs[result.best_run].best_value) result.best_run = r;
    }

    const auto circuit = build_qaoa_circuit(g, result.best().best_params());
    EnsembleOptions eo;
    eo.realizations = realizations;
    eo.master_seed = derive_seed(opts.master_seed, {kDiagnosticStream});
    eo.diagonal_observable = &cuts;
    const auto ens = run_noisy_ensemble(result.schedule, circuit, noise, eo);
    result.best_overlap = overlap_with_optima(ens.probabilities, exact.optima);
    result.best_exact_ratio = approximation_ratio(ens.observable_mean, exact.k_max);
    return result;
}

std::string run_records_to_json(const InstanceSolveResult& r) {
    nlohmann::ordered_json j;
    j["k_max"] = r.k_max;
    j["grid"] = {r.grid.rows, r.grid.cols};
    j["depth"] = r.depth;
    j["total_evals"] = r.total_evals;
    j["best_run"] = r.best_run;
    j["best_overlap"] = r.best_overlap;
    j["best_exact_ratio"] = r.best_exact_ratio;
    auto& runs = j["runs"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.runs) {
        const auto params = rec.best_params();
        nlohmann::ordered_json rj;
        rj["gammas"] = params.gammas;
        rj["betas"] = params.betas;
        rj["best_value"] = rec.best_value;
        rj["n_function_evals"] = rec.n_function_evals;
        rj["n_updates"] = rec.n_updates;
        rj["termination"] = termination_name(rec.termination);
        rj["value_trace"] = rec.value_trace;
        runs.push_back(std::move(rj));
    }
    return j.dump(1) + "\n";
}

}  // namespace qaoacost
