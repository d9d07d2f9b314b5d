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

#include "qaoacost/costmodel.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qaoacost/optimizer.h"

namespace qaoacost {

void HardwareTimes::validate() const {
    if (!(prep_plus_measure > 0.0) || !(gate > 0.0)) {
        throw std::invalid_argument("HardwareTimes: durations must be positive");
    }
}

double single_repetition_time(int depth, const HardwareTimes& hw) {
    hw.validate();
    if (depth < 0) throw std::invalid_argument("single_repetition_time: negative depth");
    return hw.prep_plus_measure + depth * hw.gate;
}

InstanceCost instance_wall_time(long long total_evals, int n_samples, int depth, const HardwareTimes& hw) {
    if (total_evals < 0 || n_samples < 0) throw std::invalid_argument("instance_wall_time: negative count");
    InstanceCost c;
    c.depth = depth;
    c.total_repetitions = total_evals * n_samples;
    c.wall_time = static_cast<double>(c.total_repetitions) * single_repetition_time(depth, hw);
    return c;
}

InstanceCost instance_wall_time(const InstanceSolveResult& solve, int n_samples, const HardwareTimes& hw) {
    return instance_wall_time(solve.total_evals, n_samples, solve.depth, hw);
}

double evals_per_run_for(double wall_time, int depth, int runs, int n_samples, const HardwareTimes& hw) {
    if (runs < 1 || n_samples < 1) throw std::invalid_argument("evals_per_run_for: counts must be positive");
    return wall_time / (single_repetition_time(depth, hw) * runs * static_cast<double>(n_samples));
}

CostSummary aggregate(std::span<const double> seconds) {
    if (seconds.empty()) throw std::invalid_argument("aggregate: no instances");
    CostSummary s;
    s.n = static_cast<int>(seconds.size());
    double sum = 0.0;
    for (double v : seconds) sum += v;
    s.mean = sum / s.n;
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : seconds) ss += (v - s.mean) * (v - s.mean);
        s.sdom = std::sqrt(ss / (s.n - 1) / s.n);
    }
    return s;
}

CostSummary aggregate(std::span<const InstanceCost> costs) {
    std::vector<double> seconds;
    seconds.reserve(costs.size());
    for (const auto& c : costs) seconds.push_back(c.wall_time);
    return aggregate(seconds);
}

std::string cost_csv(std::span<const CostRow> rows) {
    std::ostringstream out;
    out << "N,p,mean_seconds,sdom_seconds,n_instances\n";
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.n_qubits << ',' << r.p << ',' << r.summary.mean << ',' << r.summary.sdom << ',' << r.summary.n << '\n';
    }
    return out.str();
}

}  // namespace qaoacost
