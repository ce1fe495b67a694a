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

#include "symprot/symmetry.hpp"

namespace symprot {

std::optional<double> inverse_spectral_gap(const std::vector<double> &phases) {
    if (phases.size() < 2) {
        return std::nullopt;
    }
    double xi = 0.0;
    for (std::size_t a = 0; a < phases.size(); ++a) {
        for (std::size_t b = a + 1; b < phases.size(); ++b) {
            const double s = std::abs(std::sin(0.5 * (phases[a] - phases[b])));
            xi = std::max(xi, 1.0 / s);
        }
    }
    return xi;
}

KickSpectrum kick_spectrum(const Operator &c0, double tol) {
    EigenPhases ep = eigphases_unitary(c0, tol);
    KickSpectrum ks;
    ks.m = ep.phases.size();
    ks.xi = inverse_spectral_gap(ep.phases);
    ks.phases = std::move(ep.phases);
    ks.projectors = std::move(ep.projectors);
    return ks;
}

}  // namespace symprot
