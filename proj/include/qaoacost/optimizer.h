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

#ifndef QAOACOST_OPTIMIZER_H
#define QAOACOST_OPTIMIZER_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qaoacost/circuit.h"
#include "qaoacost/graphs.h"
#include "qaoacost/rng.h"
#include "qaoacost/scheduler.h"
#include "qaoacost/simulator.h"

namespace qaoacost {

struct NmConfig {
    double reflection = 1.1;
    double expansion = 1.5;
    double contraction = 0.6;
    double shrink = 0.4;
    int max_updates = 300;
    // Updates without a new best vertex before stopping; 0 means 10 * p.
    int stall_window = 0;
    int n_restarts = 20;
    int n_samples = 10000;

    void validate() const;
    int stall_updates(int p) const { return stall_window > 0 ? stall_window : 10 * p; }
};

enum class Termination { MaxUpdates, Stalled };
const char* termination_name(Termination t);

struct RunRecord {
    std::vector<double> best_point;
    double best_value = 0.0;
    int n_function_evals = 0;
    int n_updates = 0;
    Termination termination = Termination::MaxUpdates;
    // Best vertex value after the initial simplex and after every update.
    std::vector<double> value_trace;

    QaoaParams best_params() const { return QaoaParams::from_vector(best_point); }
};

using Objective = std::function<double(std::span<const double>)>;
using Simplex = std::vector<std::vector<double>>;

// Maximizes `objective`. Stops after cfg.max_updates updates, or once the best
// vertex has not changed for `stall_window` consecutive updates. Every
// objective call is counted, including the initial simplex.
RunRecord nelder_mead(const Objective& objective, Simplex simplex, const NmConfig& cfg, int stall_window);

// Base point gamma_l ~ U[0, 2pi), beta_l ~ U[0, pi), plus base + offset * e_k.
Simplex random_initial_simplex(int p, Rng& rng, double offset = 0.25);

enum class Pipeline { Exact, Sampled };

struct SolveOptions {
    int p = 4;
    NmConfig nm;
    Pipeline pipeline = Pipeline::Sampled;
    std::optional<NoiseParams> noise;
    int realizations = 384;
    std::uint64_t master_seed = 0;
    // Restarts run concurrently on up to this many threads.
    unsigned threads = 1;
};

struct InstanceSolveResult {
    std::vector<RunRecord> runs;
    int best_run = 0;
    long long total_evals = 0;
    int k_max = 0;
    // Noise-averaged diagnostics at the best run's parameters.
    double best_overlap = 0.0;
    double best_exact_ratio = 0.0;
    GridTopology grid;
    Schedule schedule;
    int depth = 0;

    const RunRecord& best() const { return runs.at(best_run); }
};

InstanceSolveResult solve_instance(const Graph& g, const SolveOptions& opts);

std::string run_records_to_json(const InstanceSolveResult& r);

}  // namespace qaoacost

#endif  // QAOACOST_OPTIMIZER_H
