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

#include "symprot/evolve.hpp"
#include "symprot/rng.hpp"

namespace symprot {

Matrix noise_rotation(const NoiseSpec &spec, std::size_t k, std::size_t qubit_slot) {
    require(k >= 1, "noise step index is 1-based");
    require(spec.lambda >= 1, "noise correlation length must be >= 1");
    // The axis is redrawn when (k - 1) mod lambda == 0 and held in between.
    const std::size_t window = (k - 1) / spec.lambda;
    Rng rng(derive_seed(spec.seed, window, spec.per_qubit_axes ? qubit_slot + 1 : 0));
    const auto axis = rng.unit_vector3();
    const Matrix n_sigma = axis[0] * pauli::X() + axis[1] * pauli::Y() + axis[2] * pauli::Z();
    return std::cos(spec.eta) * pauli::I() - cplx(0.0, std::sin(spec.eta)) * n_sigma;
}

void apply_noise(Vector &psi, const HamiltonianModel &model, const NoiseSpec &spec, std::size_t k) {
    require(static_cast<std::size_t>(psi.size()) == model.dim(), "state length does not match the model");
    if (spec.eta == 0.0) {
        return;
    }
    const Layout &layout = model.layout();
    const auto n = static_cast<std::size_t>(psi.size());
    Matrix shared;
    if (!spec.per_qubit_axes) {
        shared = noise_rotation(spec, k);
    }
    std::size_t slot = 0;
    for (std::size_t f = 0; f < layout.num_factors(); ++f) {
        if (model.roles()[f] != FactorRole::site_qubit) {
            continue;
        }
        unsigned bit = 0;
        while ((std::size_t{1} << bit) < layout.stride(f)) {
            ++bit;
        }
        const Matrix w = spec.per_qubit_axes ? noise_rotation(spec, k, slot) : shared;
        const cplx data[4] = {w(0, 0), w(0, 1), w(1, 0), w(1, 1)};
        kernels::apply_dense_block(psi.data(), n, &bit, 1, data);
        ++slot;
    }
}

StateVec apply_noise(const StateVec &state, const HamiltonianModel &model, const NoiseSpec &spec, std::size_t k) {
    Vector psi = state.amplitudes();
    apply_noise(psi, model, spec, k);
    return StateVec(state.layout(), std::move(psi), state.tagged_normalized());
}

}  // namespace symprot
