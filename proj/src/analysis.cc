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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "json.hpp"

namespace qaoacost {

namespace {

double t_quantile(int dof, double level) {
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("prediction level must be in (0,1)");
    boost::math::students_t dist(static_cast<double>(dof));
    return boost::math::quantile(dist, 0.5 + 0.5 * level);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

double to_double(const std::string& s, const std::string& line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("timing csv: bad number in '" + line + "'");
    return v;
}

}  // namespace

std::pair<double, double> FitResult::prediction_band(double n, double level) const {
    const double centre = predict_log10(n);
    const double half = t_quantile(n_points - 2, level) * residual_std *
                        std::sqrt(1.0 + 1.0 / n_points + (n - x_mean) * (n - x_mean) / sxx);
    return {centre - half, centre + half};
}

FitResult fit_exponential(std::span<const DataPoint> points) {
    if (points.size() < 3) throw std::invalid_argument("fit_exponential: need at least 3 points");
    FitResult f;
    f.n_points = static_cast<int>(points.size());
    std::vector<double> y;
    double sx = 0.0, sy = 0.0;
    for (const auto& p : points) {
        if (!(p.seconds > 0.0) || !std::isfinite(p.seconds) || !std::isfinite(p.n)) {
            throw std::invalid_argument("fit_exponential: times must be positive and finite");
        }
        y.push_back(std::log10(p.seconds));
        sx += p.n;
        sy += y.back();
    }
    f.x_mean = sx / f.n_points;
    const double y_mean = sy / f.n_points;
    double sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = points[i].n - f.x_mean;
        f.sxx += dx * dx;
        sxy += dx * (y[i] - y_mean);
        syy += (y[i] - y_mean) * (y[i] - y_mean);
    }
    if (!(f.sxx > 0.0)) throw std::invalid_argument("fit_exponential: need at least two distinct sizes");
    f.slope = sxy / f.sxx;
    f.intercept = y_mean - f.slope * f.x_mean;
    double sse = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double r = y[i] - f.predict_log10(points[i].n);
        sse += r * r;
    }
    f.residual_std = std::sqrt(sse / (f.n_points - 2));
    f.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
    return f;
}

std::optional<double> crossover(const FitResult& quantum, const FitResult& classical) {
    const double ds = quantum.slope - classical.slope;
    if (ds == 0.0) return std::nullopt;
    return (classical.intercept - quantum.intercept) / ds;
}

Crossover crossover_with_band(const FitResult& quantum, const FitResult& classical, double level) {
    Crossover out;
    out.n_star = crossover(quantum, classical);
    if (!out.n_star) return out;
    // D(N) = classical - quantum line = a N + b meets +-k sqrt(1 + 1/n + (N - xm)^2 / Sxx).
    const double a = classical.slope - quantum.slope;
    const double b = classical.intercept - quantum.intercept;
    const double k = t_quantile(quantum.n_points - 2, level) * quantum.residual_std;
    if (k == 0.0) {
        out.band_low = out.band_high = out.n_star;
        return out;
    }
    const double k2 = k * k;
    const double xm = quantum.x_mean;
    const double qa = a * a - k2 / quantum.sxx;
    const double qb = 2.0 * a * b + 2.0 * k2 * xm / quantum.sxx;
    const double qc = b * b - k2 * (1.0 + 1.0 / quantum.n_points) - k2 * xm * xm / quantum.sxx;
    std::vector<double> roots;
    if (std::abs(qa) < 1e-300) {
        if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            roots.push_back((-qb - sq) / (2.0 * qa));
            roots.push_back((-qb + sq) / (2.0 * qa));
        }
    }
    const double ns = *out.n_star;
    // Entry and exit are the crossings adjacent to the line intersection.
    for (double r : roots) {
        if (r <= ns && (!out.band_low || r > *out.band_low)) out.band_low = r;
        if (r >= ns && (!out.band_high || r < *out.band_high)) out.band_high = r;
    }
    return out;
}

std::vector<TimingRow> parse_timing_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<TimingRow> rows;
    bool cost_format = false;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        const auto cells = split_csv(line);
        if (!header_seen && !cells.empty() && cells[0] == "N") {
            header_seen = true;
            cost_format = cells.size() >= 3 && cells[1] == "p" && cells[2] == "mean_seconds";
            continue;
        }
        TimingRow row;
        if (cost_format) {
            if (cells.size() < 3) throw std::invalid_argument("cost csv: short row '" + line + "'");
            row.n = to_double(cells[0], line);
            row.seconds = to_double(cells[2], line);
            row.label = "qaoa-p" + cells[1];
        } else {
            if (cells.size() < 2) throw std::invalid_argument("timing csv: short row '" + line + "'");
            row.n = to_double(cells[0], line);
            row.seconds = to_double(cells[1], line);
            row.label = cells.size() > 2 ? cells[2] : "";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string timing_csv(std::span<const TimingRow> rows) {
    std::ostringstream out;
    out << "N,seconds,label\n" << std::setprecision(10);
    for (const auto& r : rows) out << r.n << ',' << r.seconds << ',' << r.label << '\n';
    return out.str();
}

std::vector<DataPoint> points_of(std::span<const TimingRow> rows) {
    std::vector<DataPoint> pts;
    for (const auto& r : rows) pts.push_back({r.n, r.seconds});
    return pts;
}

Report make_report(const Series& quantum, const Series& classical, double level) {
    const FitResult fq = fit_exponential(quantum.points);
    const FitResult fc = fit_exponential(classical.points);
    const Crossover cross = crossover_with_band(fq, fc, level);

    double n_min = 1e300, n_max = -1e300;
    for (const auto* s : {&quantum, &classical}) {
        for (const auto& p : s->points) {
            n_min = std::min(n_min, p.n);
            n_max = std::max(n_max, p.n);
        }
    }
    double grid_max = n_max;
    for (const auto& v : {cross.n_star, cross.band_high}) {
        if (v && *v > grid_max) grid_max = *v;
    }
    grid_max = std::min(1.25 * grid_max, 1e4);
    constexpr int kGridPoints = 200;

    std::ostringstream csv;
    csv << std::setprecision(10);
    csv << "series,kind,N,log10_seconds,seconds,band_low_log10,band_high_log10\n";
    for (const auto* s : {&quantum, &classical}) {
        for (const auto& p : s->points) {
            csv << s->label << ",data," << p.n << ',' << std::log10(p.seconds) << ',' << p.seconds << ",,\n";
        }
    }
    const std::pair<const Series*, const FitResult*> fits[] = {{&quantum, &fq}, {&classical, &fc}};
    for (const auto& [s, f] : fits) {
        for (int k = 0; k <= kGridPoints; ++k) {
            const double n = n_min + (grid_max - n_min) * k / kGridPoints;
            const double y = f->predict_log10(n);
            const auto [lo, hi] = f->prediction_band(n, level);
            csv << s->label << ",fit," << n << ',' << y << ',' << std::pow(10.0, y) << ',' << lo << ',' << hi << '\n';
        }
    }
    if (cross.n_star) {
        csv << "crossover,point," << *cross.n_star << ',' << fq.predict_log10(*cross.n_star) << ','
            << std::pow(10.0, fq.predict_log10(*cross.n_star)) << ",,\n";
    }

    auto fit_json = [](const std::string& label, const FitResult& f) {
        nlohmann::ordered_json j;
        j["label"] = label;
        j["slope"] = f.slope;
        j["intercept"] = f.intercept;
        j["r_squared"] = f.r_squared;
        j["n_points"] = f.n_points;
        j["residual_std"] = f.residual_std;
        return j;
    };
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
    nlohmann::ordered_json j;
    j["prediction_level"] = level;
    j["quantum"] = fit_json(quantum.label, fq);
    j["classical"] = fit_json(classical.label, fc);
    j["crossover"] = {{"n_star", opt(cross.n_star)}, {"band_low", opt(cross.band_low)}, {"band_high", opt(cross.band_high)}};
    return {csv.str(), j.dump(1) + "\n"};
}

}  // namespace qaoacost
