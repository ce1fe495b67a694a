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
#include <cstdio>
#include <limits>
#include <sstream>

#include "symprot/cli.hpp"

namespace symprot {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;

const char *const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    bool log = false;
    double lo = 0.0, hi = 1.0;

    double tr(double v) const { return log ? std::log10(v) : v; }
    void include(double v) {
        if (!std::isfinite(v)) {
            return;
        }
        require(!log || v > 0.0, "log axis needs positive data");
        const double u = tr(v);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    void finish() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    double frac(double v) const { return (tr(v) - lo) / (hi - lo); }
};

}  // namespace

std::string svg_string(const std::vector<RunSeries> &series, const AxesSpec &axes) {
    Axis ax{axes.log_x, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    Axis ay{axes.log_y, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto &s : series) {
        require(s.median.size() == s.x.size(), "series must be summarized before plotting");
        const bool band = s.num_reps() >= 4;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.median[i])) {
                continue;
            }
            ax.include(s.x[i]);
            ay.include(s.median[i]);
            if (band) {
                ay.include(s.q25[i]);
                ay.include(s.q75[i]);
            }
        }
    }
    ax.finish();
    ay.finish();
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + ax.frac(v) * pw; };
    auto py = [&](double v) { return kTop + (1.0 - ay.frac(v)) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"15\">" << escape(axes.title) << "</text>\n";
    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\""
       << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    // Ticks at the axis ends; log axes label powers of ten.
    auto label = [](const Axis &a, double u) {
        char buf[32];
        if (a.log) {
            std::snprintf(buf, sizeof buf, "1e%.1f", u);
        } else {
            std::snprintf(buf, sizeof buf, "%.3g", u);
        }
        return std::string(buf);
    };
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double f : {0.0, 0.5, 1.0}) {
        const double ux = ax.lo + f * (ax.hi - ax.lo);
        const double uy = ay.lo + f * (ay.hi - ay.lo);
        os << "<text x=\"" << num(kLeft + f * pw) << "\" y=\"" << num(kTop + ph + 16)
           << "\" text-anchor=\"middle\">" << label(ax, ux) << "</text>\n";
        os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kTop + (1.0 - f) * ph + 4)
           << "\" text-anchor=\"end\">" << label(ay, uy) << "</text>\n";
    }
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10) << "\" text-anchor=\"middle\">"
       << escape(axes.x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << num(kTop + ph / 2) << ")\">" << escape(axes.y_label) << "</text>\n";
    os << "</g>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto &s = series[si];
        const char *color = kColors[si % (sizeof kColors / sizeof kColors[0])];
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isfinite(s.median[i])) {
                idx.push_back(i);
            }
        }
        if (s.num_reps() >= 4 && !idx.empty()) {
            os << "<polygon class=\"band\" fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
            for (std::size_t i : idx) {
                os << num(px(s.x[i])) << ',' << num(py(s.q75[i])) << ' ';
            }
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
                os << num(px(s.x[*it])) << ',' << num(py(s.q25[*it])) << ' ';
            }
            os << "\"/>\n";
        }
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < idx.size(); ++j) {
            os << (j ? " " : "") << num(px(s.x[idx[j]])) << ',' << num(py(s.median[idx[j]]));
        }
        os << "\"/>\n";
        const double ly = kTop + 14 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << num(kWidth - kRight + 10) << "\" y1=\"" << num(ly) << "\" x2=\""
           << num(kWidth - kRight + 30) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << num(kWidth - kRight + 35) << "\" y=\"" << num(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_svg(const std::vector<RunSeries> &series, const AxesSpec &axes, const std::string &path) {
    write_file_atomic(path, svg_string(series, axes));
}

}  // namespace symprot
