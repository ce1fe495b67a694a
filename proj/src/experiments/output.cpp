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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symprot/experiments.hpp"

namespace symprot {

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string series_csv(const RunSeries &series) {
    std::ostringstream os;
    os << "x,rep_id,value,flags\n";
    for (std::size_t i = 0; i < series.x.size(); ++i) {
        const std::string x = format_double(series.x[i]);
        for (std::size_t rep = 0; rep < series.reps.size(); ++rep) {
            os << x << ',' << rep << ',' << format_double(series.reps[rep][i]) << ','
               << (rep < series.flags.size() ? series.flags[rep][i] : std::string()) << '\n';
        }
        if (series.median.size() == series.x.size()) {
            os << x << ",median," << format_double(series.median[i]) << ",\n";
            os << x << ",q25," << format_double(series.q25[i]) << ",\n";
            os << x << ",q75," << format_double(series.q75[i]) << ",\n";
        }
    }
    return os.str();
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f << contents;
        if (!f) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    fs::rename(tmp, target);
}

}  // namespace symprot
