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

#ifndef QAOACOST_COSTMODEL_H
#define QAOACOST_COSTMODEL_H

#include <span>
#include <string>
#include <vector>

namespace qaoacost {

struct InstanceSolveResult;

// Seconds. Only the sum of preparation and measurement time matters.
struct HardwareTimes {
    double prep_plus_measure = 1e-6;
    double gate = 10e-9;

    void validate() const;
};

struct InstanceCost {
    int depth = 0;
    long long total_repetitions = 0;
    double wall_time = 0.0;
};

struct CostSummary {
    double mean = 0.0;
    // Standard deviation of the mean: sqrt(sample variance / n).
    double sdom = 0.0;
    int n = 0;
};

// T_P + T_M + depth * T_G.
double single_repetition_time(int depth, const HardwareTimes& hw);

// Every objective evaluation of every restart costs n_samples repetitions.
InstanceCost instance_wall_time(long long total_evals, int n_samples, int depth, const HardwareTimes& hw);
InstanceCost instance_wall_time(const InstanceSolveResult& solve, int n_samples, const HardwareTimes& hw);

// Mean evaluations per run implied by a measured wall time.
double evals_per_run_for(double wall_time, int depth, int runs, int n_samples, const HardwareTimes& hw);

CostSummary aggregate(std::span<const double> seconds);
CostSummary aggregate(std::span<const InstanceCost> costs);

struct CostRow {
    int n_qubits = 0;
    int p = 0;
    CostSummary summary;
};

// Header: N,p,mean_seconds,sdom_seconds,n_instances
std::string cost_csv(std::span<const CostRow> rows);

}  // namespace qaoacost

#endif  // QAOACOST_COSTMODEL_H
