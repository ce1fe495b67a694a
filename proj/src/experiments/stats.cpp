// Copyright 2026 The Symprot Authors
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

#include <algorithm>
#include <cmath>
#include <limits>

#include "symprot/experiments.hpp"
#include "symprot/rng.hpp"

namespace symprot {

double percentile(std::vector<double> values, double q) {
    require(q >= 0.0 && q <= 1.0, "percentile needs q in [0, 1]");
    values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }),
                 values.end());
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

Summary summarize(const std::vector<double> &values) {
    require(!values.empty(), "summarize needs at least one repetition");
    return Summary{percentile(values, 0.5), percentile(values, 0.25), percentile(values, 0.75)};
}

PowerLawFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y,
                          std::optional<std::pair<double, double>> range) {
    require(x.size() == y.size(), "fit needs equal-length x and y");
    std::vector<double> lx, ly;
    PowerLawFit fit;
    fit.x_lo = std::numeric_limits<double>::infinity();
    fit.x_hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (range && (x[i] < range->first || x[i] > range->second)) {
            continue;
        }
        require(x[i] > 0.0, "power-law fit needs x > 0");
        require(y[i] > 0.0 && std::isfinite(y[i]), "power-law fit needs finite y > 0 in the fit range");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
        fit.x_lo = std::min(fit.x_lo, x[i]);
        fit.x_hi = std::max(fit.x_hi, x[i]);
    }
    require(lx.size() >= 4, "power-law fit needs at least 4 points");
    const auto n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    require(sxx > 0.0, "power-law fit needs at least two distinct x values");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double d = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss += d * d;
    }
    fit.residual = std::sqrt(ss / n);
    fit.points = lx.size();
    return fit;
}

RunSeries::RunSeries(std::string name_in, std::string x_label_in, std::vector<double> x_in,
                     std::size_t repetitions)
    : name(std::move(name_in)), x_label(std::move(x_label_in)), x(std::move(x_in)) {
    reps.assign(repetitions, std::vector<double>(x.size(), 0.0));
    flags.assign(repetitions, std::vector<std::string>(x.size()));
}

void RunSeries::resummarize() {
    require(!reps.empty(), "series has no repetitions");
    median.assign(x.size(), 0.0);
    q25.assign(x.size(), 0.0);
    q75.assign(x.size(), 0.0);
    std::vector<double> column(reps.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t rep = 0; rep < reps.size(); ++rep) {
            require(reps[rep].size() == x.size(), "ragged repetition series");
            column[rep] = reps[rep][i];
        }
        const Summary s = summarize(column);
        median[i] = s.median;
        q25[i] = s.q25;
        q75[i] = s.q75;
    }
}

void RunSeries::fit_median(std::optional<std::pair<double, double>> range) {
    if (median.size() != x.size()) {
        resummarize();
    }
    fit = fit_power_law(x, median, range);
}

nlohmann::json RunSeries::summary_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["x_label"] = x_label;
    j["points"] = x.size();
    j["repetitions"] = reps.size();
    if (fit) {
        j["fit"] = {{"slope", fit->slope},       {"intercept", fit->intercept}, {"residual", fit->residual},
                    {"x_lo", fit->x_lo},         {"x_hi", fit->x_hi},           {"points", fit->points}};
    }
    std::size_t flagged = 0;
    for (const auto &row : flags) {
        for (const auto &f : row) {
            flagged += f.empty() ? 0 : 1;
        }
    }
    j["flagged_points"] = flagged;
    return j;
}

std::uint64_t rep_seed(std::uint64_t master, const std::string &experiment_id, std::size_t rep) {
    return derive_seed(master, experiment_id, rep);
}

}  // namespace symprot
