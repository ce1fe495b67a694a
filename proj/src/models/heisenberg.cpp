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

#include <string>
#include <utility>

#include "models/pieces.hpp"
#include "symprot/models.hpp"
#include "symprot/rng.hpp"

namespace symprot {

namespace {

// Qubit i is layout factor i; the first factor is the most significant bit.
unsigned qubit_bit(int n, int i) {
    return static_cast<unsigned>(n - 1 - i);
}

struct Bond {
    int i, j;
    double J;
};

std::vector<Term> heisenberg_terms(int n, const std::vector<Bond> &bonds, const std::vector<double> &fields) {
    const Matrix paulis[3] = {pauli::X(), pauli::Y(), pauli::Z()};
    const char *labels[3] = {"H_X", "H_Y", "H_Z"};
    std::vector<Term> terms;
    for (int a = 0; a < 3; ++a) {
        Term term;
        term.label = labels[a];
        for (const Bond &b : bonds) {
            term.pieces.push_back(detail::make_piece(
                {{{qubit_bit(n, b.i)}, paulis[a]}, {{qubit_bit(n, b.j)}, paulis[a]}}, b.J));
        }
        if (a == 2) {
            for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
                term.pieces.push_back(detail::make_piece({{{qubit_bit(n, i)}, pauli::Z()}}, fields[i]));
            }
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace

HamiltonianModel build_random_heisenberg(int n, std::uint64_t seed) {
    require(n >= 2 && n <= 13, "random Heisenberg model needs 2 <= n <= 13");
    Rng rng(seed);
    std::vector<Bond> bonds;
    ModelMeta meta;
    meta.kind = "heisenberg";
    meta.n = n;
    meta.seed = seed;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double J = rng.uniform(-1.0, 1.0);
            bonds.push_back({i, j, J});
            meta.couplings.push_back(J);
        }
    }
    return HamiltonianModel(Layout::qubits(static_cast<std::size_t>(n)),
                            std::vector<FactorRole>(static_cast<std::size_t>(n), FactorRole::site_qubit),
                            heisenberg_terms(n, bonds, {}), std::move(meta));
}

HamiltonianModel build_mbl_heisenberg(int n, double h, std::uint64_t seed) {
    require(n >= 3 && n <= 13, "MBL Heisenberg model needs 3 <= n <= 13");
    require(h >= 0.0, "disorder strength must be non-negative");
    Rng rng(seed);
    std::vector<Bond> bonds;
    for (int i = 0; i < n; ++i) {
        bonds.push_back({i, (i + 1) % n, 1.0});
    }
    ModelMeta meta;
    meta.kind = "mbl";
    meta.n = n;
    meta.h = h;
    meta.seed = seed;
    for (int i = 0; i < n; ++i) {
        meta.fields.push_back(rng.uniform(-h, h));
    }
    auto terms = heisenberg_terms(n, bonds, meta.fields);
    return HamiltonianModel(Layout::qubits(static_cast<std::size_t>(n)),
                            std::vector<FactorRole>(static_cast<std::size_t>(n), FactorRole::site_qubit),
                            std::move(terms), std::move(meta));
}

}  // namespace symprot
