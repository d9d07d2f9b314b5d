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

#include "qaoacost/estimator.h"

#include <cmath>
#include <stdexcept>

namespace qaoacost {

SampleEstimate estimate_cut(std::span<const Bitstring> samples, const Graph& g) {
    if (samples.empty()) throw std::invalid_argument("estimate_cut: no samples");
    SampleEstimate est;
    est.n_samples = static_cast<int>(samples.size());
    // Cut values are small integers; a histogram gives exact sums.
    std::vector<long long> hist(g.num_edges() + 1, 0);
    for (Bitstring b : samples) ++hist[cut_value(g, b)];
    long long sum = 0;
    for (int k = 0; k <= g.num_edges(); ++k) sum += hist[k] * k;
    est.mean_cut = static_cast<double>(sum) / est.n_samples;
    if (est.n_samples > 1) {
        double ss = 0.0;
        for (int k = 0; k <= g.num_edges(); ++k) ss += hist[k] * (k - est.mean_cut) * (k - est.mean_cut);
        est.std_error = std::sqrt(ss / (est.n_samples - 1)) / std::sqrt(static_cast<double>(est.n_samples));
    }
    return est;
}

std::vector<double> cut_table(const Graph& g) {
    if (g.num_vertices() > kMaxSimulatedQubits) throw std::invalid_argument("cut_table: graph too large");
    const std::size_t dim = std::size_t{1} << g.num_vertices();
    std::vector<double> table(dim);
    for (std::size_t b = 0; b < dim; ++b) table[b] = cut_value(g, static_cast<Bitstring>(b));
    return table;
}

double exact_cut_expectation(std::span<const double> probabilities, const Graph& g) {
    if (probabilities.size() != (std::size_t{1} << g.num_vertices())) {
        throw std::invalid_argument("exact_cut_expectation: register size does not match graph");
    }
    double total = 0.0;
    for (const auto& [i, j] : g.edges()) {
        double zz = 0.0;
        for (std::size_t b = 0; b < probabilities.size(); ++b) {
            zz += (((b >> i) ^ (b >> j)) & 1U) ? -probabilities[b] : probabilities[b];
        }
        total += 0.5 * (1.0 - zz);
    }
    return total;
}

double exact_cut_expectation(const StateVector& s, const Graph& g) {
    const auto p = s.probabilities();
    return exact_cut_expectation(p, g);
}

double approximation_ratio(double expected_cut, int k_max) {
    if (k_max <= 0) throw std::invalid_argument("approximation_ratio: graph has no cuttable edge");
    return expected_cut / k_max;
}

double approximation_ratio(double expected_cut, const Graph& g) {
    return approximation_ratio(expected_cut, brute_force_maxcut(g).k_max);
}

}  // namespace qaoacost
