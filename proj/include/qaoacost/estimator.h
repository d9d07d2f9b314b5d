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

#ifndef QAOACOST_ESTIMATOR_H
#define QAOACOST_ESTIMATOR_H

#include <span>
#include <vector>

#include "qaoacost/graphs.h"
#include "qaoacost/simulator.h"

namespace qaoacost {

struct SampleEstimate {
    double mean_cut = 0.0;
    int n_samples = 0;
    double std_error = 0.0;  // sample std (n-1) / sqrt(n)
};

SampleEstimate estimate_cut(std::span<const Bitstring> samples, const Graph& g);

// cut_value for every basis index; the diagonal of the cut operator.
std::vector<double> cut_table(const Graph& g);

// sum over edges of (1 - <Z_i Z_j>) / 2.
double exact_cut_expectation(const StateVector& s, const Graph& g);
double exact_cut_expectation(std::span<const double> probabilities, const Graph& g);

double approximation_ratio(double expected_cut, int k_max);
// Solves the instance by brute force for the denominator.
double approximation_ratio(double expected_cut, const Graph& g);

}  // namespace qaoacost

#endif  // QAOACOST_ESTIMATOR_H
