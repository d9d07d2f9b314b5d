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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"

using namespace qaoacost;

TEST(Estimator, CutTable) {
    const auto table = cut_table(fixtures::triangle());
    EXPECT_EQ(table, (std::vector<double>{0, 2, 2, 2, 2, 2, 2, 0}));
}

TEST(Estimator, RepeatedAssignmentHasNoError) {
    const Graph g = fixtures::reference_graph();
    const std::vector<Bitstring> samples(50, Bitstring{30});
    const auto est = estimate_cut(samples, g);
    EXPECT_EQ(est.mean_cut, 10.0);
    EXPECT_EQ(est.n_samples, 50);
    EXPECT_EQ(est.std_error, 0.0);
}

TEST(Estimator, UniformTriangleSamples) {
    std::vector<Bitstring> samples;
    for (int rep = 0; rep < 10; ++rep) {
        for (Bitstring b = 0; b < 8; ++b) samples.push_back(b);
    }
    const auto est = estimate_cut(samples, fixtures::triangle());
    EXPECT_DOUBLE_EQ(est.mean_cut, 1.5);
    // Sample std with n-1: sqrt(80 * 0.75 / 79).
    EXPECT_NEAR(est.std_error, std::sqrt(0.75 * 80 / 79) / std::sqrt(80.0), 1e-12);
    EXPECT_THROW(estimate_cut(std::vector<Bitstring>{}, fixtures::triangle()), std::invalid_argument);
}

TEST(Estimator, ExactExpectationSimpleStates) {
    const Graph g = fixtures::reference_graph();
    EXPECT_NEAR(exact_cut_expectation(init_plus_state(8), g), 6.0, 1e-12);
    EXPECT_NEAR(exact_cut_expectation(StateVector::basis(8, 89), g), 10.0, 1e-12);
    EXPECT_NEAR(exact_cut_expectation(StateVector::basis(8, 0), g), 0.0, 1e-12);
}

TEST(Estimator, ExactExpectationMatchesDenseOracle) {
    const Graph k3 = fixtures::triangle();
    for (double gamma = 0.2; gamma < 3.0; gamma += 0.7) {
        for (double beta = 0.1; beta < 1.5; beta += 0.45) {
            const QaoaParams params{{gamma}, {beta}};
            const auto s = simulate_logical(build_qaoa_circuit(k3, params));
            EXPECT_NEAR(exact_cut_expectation(s, k3), oracle::dense_expected_cut(k3, params), 1e-10);
        }
    }
}

TEST(Estimator, SampledEstimateWithinFourSigma) {
    const Graph g = fixtures::reference_graph();
    const auto s = simulate_logical(build_qaoa_circuit(g, {{0.6, 0.9}, {0.5, 0.2}}));
    const double exact = exact_cut_expectation(s, g);
    for (int n : {10000, 100000}) {
        Rng rng(n);
        const auto est = estimate_cut(measure_samples(s, n, rng), g);
        EXPECT_LT(std::abs(est.mean_cut - exact), 4 * est.std_error) << n;
    }
}

TEST(Estimator, ApproximationRatio) {
    const Graph k3 = fixtures::triangle();
    EXPECT_DOUBLE_EQ(approximation_ratio(exact_cut_expectation(init_plus_state(3), k3), k3), 0.75);
    EXPECT_DOUBLE_EQ(approximation_ratio(2.0, k3), 1.0);
    EXPECT_DOUBLE_EQ(approximation_ratio(5.0, 10), 0.5);
    EXPECT_THROW(approximation_ratio(1.0, 0), std::invalid_argument);
}
