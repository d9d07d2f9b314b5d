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

#include "qaoacost/analysis.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "json.hpp"

using namespace qaoacost;

namespace {

std::vector<DataPoint> exact_exponential(double slope, double intercept, std::vector<double> sizes) {
    std::vector<DataPoint> pts;
    for (double n : sizes) pts.push_back({n, std::pow(10.0, slope * n + intercept)});
    return pts;
}

FitResult line(double slope, double intercept) {
    FitResult f;
    f.slope = slope;
    f.intercept = intercept;
    return f;
}

const std::vector<DataPoint> kTableP4{{8, 100.6}, {10, 102.8}, {12, 106.6}, {14, 107.5}, {16, 113.1}, {20, 118.8}};

}  // namespace

TEST(Analysis, RecoversExactExponential) {
    const auto f = fit_exponential(exact_exponential(0.0409, -8.0, {10, 20, 30, 40, 50}));
    EXPECT_NEAR(f.slope, 0.0409, 1e-10);
    EXPECT_NEAR(f.intercept, -8.0, 1e-10);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
    EXPECT_EQ(f.n_points, 5);
}

TEST(Analysis, RejectsTooFewOrBadPoints) {
    EXPECT_THROW(fit_exponential(exact_exponential(0.1, 0.0, {1, 2})), std::invalid_argument);
    EXPECT_THROW(fit_exponential(std::vector<DataPoint>{{1, 1.0}, {2, 0.0}, {3, 1.0}}), std::invalid_argument);
    EXPECT_THROW(fit_exponential(std::vector<DataPoint>{{1, 1.0}, {1, 2.0}, {1, 3.0}}), std::invalid_argument);
}

TEST(Analysis, TablePointsRegression) {
    // Reference values from an independent least-squares computation.
    const auto f = fit_exponential(kTableP4);
    EXPECT_NEAR(f.slope, 0.0061225676, 1e-9);
    EXPECT_NEAR(f.intercept, 1.9520384005, 1e-9);
    EXPECT_NEAR(f.r_squared, 0.9827166515, 1e-9);
}

TEST(Analysis, BandContainsLineAndWidensAwayFromCentroid) {
    const auto f = fit_exponential(kTableP4);
    double previous = 0.0;
    for (double n : {13.0, 20.0, 40.0, 100.0}) {
        const auto [lo, hi] = f.prediction_band(n);
        EXPECT_LT(lo, f.predict_log10(n));
        EXPECT_GT(hi, f.predict_log10(n));
        EXPECT_NEAR(f.predict_log10(n) - lo, hi - f.predict_log10(n), 1e-12);
        EXPECT_GT(hi - lo, previous);
        previous = hi - lo;
    }
    const auto [l90, h90] = f.prediction_band(30, 0.90);
    const auto [l95, h95] = f.prediction_band(30, 0.95);
    EXPECT_LT(h90 - l90, h95 - l95);
}

TEST(Analysis, CrossoverOfPublishedSlopes) {
    const auto n = crossover(line(0.0141, 2.0), line(0.0409, -6.0));
    ASSERT_TRUE(n.has_value());
    EXPECT_NEAR(*n, 8.0 / 0.0268, 1e-9);
    EXPECT_FALSE(crossover(line(0.02, 1.0), line(0.02, -3.0)).has_value());
    // Shifting both intercepts together leaves the crossing in place.
    EXPECT_NEAR(*crossover(line(0.0141, 5.0), line(0.0409, -3.0)), *n, 1e-9);
}

TEST(Analysis, BandCrossingsLieOnBandEdges) {
    const auto q = fit_exponential(kTableP4);
    const auto c = fit_exponential(exact_exponential(0.0409, -6.0, {20, 30, 40, 50}));
    const auto x = crossover_with_band(q, c);
    ASSERT_TRUE(x.n_star && x.band_low && x.band_high);
    EXPECT_LT(*x.band_low, *x.n_star);
    EXPECT_GT(*x.band_high, *x.n_star);
    EXPECT_NEAR(q.prediction_band(*x.band_low).first, c.predict_log10(*x.band_low), 1e-9);
    EXPECT_NEAR(q.prediction_band(*x.band_high).second, c.predict_log10(*x.band_high), 1e-9);
}

TEST(Analysis, PredictionBandCoverage) {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> noise(0.0, 0.05);
    const std::vector<double> sizes{8, 10, 12, 14, 16, 18, 20};
    std::uniform_real_distribution<double> where(4.0, 30.0);
    int covered = 0;
    constexpr int kTrials = 1000;
    for (int t = 0; t < kTrials; ++t) {
        std::vector<DataPoint> pts;
        for (double n : sizes) pts.push_back({n, std::pow(10.0, 0.02 * n + 1.0 + noise(rng))});
        const auto f = fit_exponential(pts);
        const double n = where(rng);
        const double y = 0.02 * n + 1.0 + noise(rng);
        const auto [lo, hi] = f.prediction_band(n);
        if (y >= lo && y <= hi) ++covered;
    }
    EXPECT_GE(covered, 900);
}

TEST(Analysis, TimingCsvRoundTrip) {
    const std::vector<TimingRow> rows{{10, 0.5, "bf"}, {12, 1.25, "bf"}};
    const auto text = timing_csv(rows);
    EXPECT_EQ(text, "N,seconds,label\n10,0.5,bf\n12,1.25,bf\n");
    const auto back = parse_timing_csv(text);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1].n, 12);
    EXPECT_EQ(back[1].seconds, 1.25);
    EXPECT_EQ(back[1].label, "bf");
    const auto cost = parse_timing_csv("N,p,mean_seconds,sdom_seconds,n_instances\n8,4,100.6,0.7,40\n");
    ASSERT_EQ(cost.size(), 1u);
    EXPECT_EQ(cost[0].label, "qaoa-p4");
    EXPECT_EQ(cost[0].seconds, 100.6);
    EXPECT_THROW(parse_timing_csv("N,seconds,label\n10,abc,x\n"), std::invalid_argument);
}

TEST(Analysis, ReportIsDeterministicAndComplete) {
    const Series q{"qaoa-p4", kTableP4};
    const Series c{"classical", exact_exponential(0.0409, -6.0, {20, 30, 40, 50})};
    const auto a = make_report(q, c);
    EXPECT_EQ(a.csv, make_report(q, c).csv);
    EXPECT_EQ(a.json, make_report(q, c).json);
    EXPECT_EQ(a.csv.substr(0, a.csv.find('\n')), "series,kind,N,log10_seconds,seconds,band_low_log10,band_high_log10");
    const auto j = nlohmann::json::parse(a.json);
    EXPECT_NEAR(j["quantum"]["slope"].get<double>(), 0.0061225676, 1e-9);
    EXPECT_NEAR(j["crossover"]["n_star"].get<double>(), (1.9520384005 + 6.0) / (0.0409 - 0.0061225676), 1e-5);
}
