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

#ifndef QAOACOST_ANALYSIS_H
#define QAOACOST_ANALYSIS_H

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qaoacost {

struct DataPoint {
    double n = 0.0;        // problem size (qubits / variables)
    double seconds = 0.0;  // time per instance
};

// Ordinary least squares of log10(seconds) against n.
struct FitResult {
    double slope = 0.0;      // log10 seconds per qubit
    double intercept = 0.0;  // log10 seconds at n = 0
    double r_squared = 0.0;
    int n_points = 0;
    double x_mean = 0.0;
    double sxx = 0.0;
    double residual_std = 0.0;  // sqrt(SSE / (n - 2))

    double predict_log10(double n) const { return intercept + slope * n; }
    // Student-t prediction interval for a new observation, in log10 seconds.
    std::pair<double, double> prediction_band(double n, double level = 0.95) const;
};

// Needs at least 3 points with positive times.
FitResult fit_exponential(std::span<const DataPoint> points);

struct Crossover {
    std::optional<double> n_star;
    // Where the classical line enters and leaves the quantum prediction band.
    std::optional<double> band_low;
    std::optional<double> band_high;
};

// Intersection of the two fitted lines; empty when the slopes are equal.
std::optional<double> crossover(const FitResult& quantum, const FitResult& classical);
Crossover crossover_with_band(const FitResult& quantum, const FitResult& classical, double level = 0.95);

struct TimingRow {
    double n = 0.0;
    double seconds = 0.0;
    std::string label;
};

// "N,seconds,label" rows; also accepts the cost CSV (N,p,mean_seconds,...),
// labelling rows "qaoa-p<p>".
std::vector<TimingRow> parse_timing_csv(const std::string& text);
std::string timing_csv(std::span<const TimingRow> rows);
std::vector<DataPoint> points_of(std::span<const TimingRow> rows);

struct Series {
    std::string label;
    std::vector<DataPoint> points;
};

struct Report {
    std::string csv;
    std::string json;
};

// Datapoints, fitted curves and band edges on a grid, and the crossover.
Report make_report(const Series& quantum, const Series& classical, double level = 0.95);

}  // namespace qaoacost

#endif  // QAOACOST_ANALYSIS_H
