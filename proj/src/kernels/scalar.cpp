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
#include <string>

#include "symprot/kernels.hpp"

namespace symprot::kernels {

namespace detail {

void block_offsets(const unsigned *qubits, unsigned k, std::size_t *offsets) {
    const std::size_t d = std::size_t{1} << k;
    for (std::size_t l = 0; l < d; ++l) {
        std::size_t off = 0;
        for (unsigned j = 0; j < k; ++j) {
            if ((l >> j) & 1U) {
                off |= std::size_t{1} << qubits[j];
            }
        }
        offsets[l] = off;
    }
}

void check_block(std::size_t n, const unsigned *qubits, unsigned k, unsigned *sorted_out) {
    require(k >= 1 && k <= kMaxBlockQubits, "block size must be 1.." + std::to_string(kMaxBlockQubits) + " qubits");
    require(n != 0 && (n & (n - 1)) == 0, "state length must be a power of two");
    std::copy(qubits, qubits + k, sorted_out);
    std::sort(sorted_out, sorted_out + k);
    for (unsigned j = 0; j < k; ++j) {
        require((std::size_t{1} << sorted_out[j]) < n, "block qubit out of range");
        require(j == 0 || sorted_out[j] != sorted_out[j - 1], "block qubits must be distinct");
    }
}

}  // namespace detail

namespace scalar {

void mul_diagonal(cplx *psi, const cplx *diag, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        psi[i] *= diag[i];
    }
}

void apply_dense_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const cplx *mat) {
    unsigned sorted[kMaxBlockQubits];
    detail::check_block(n, qubits, k, sorted);
    const std::size_t d = std::size_t{1} << k;
    std::size_t off[std::size_t{1} << kMaxBlockQubits];
    detail::block_offsets(qubits, k, off);
    cplx g[std::size_t{1} << kMaxBlockQubits];
    const std::size_t bases = n >> k;
    for (std::size_t b = 0; b < bases; ++b) {
        const std::size_t base = detail::insert_zero_bits(b, sorted, k);
        for (std::size_t c = 0; c < d; ++c) {
            g[c] = psi[base + off[c]];
        }
        for (std::size_t r = 0; r < d; ++r) {
            cplx acc = 0.0;
            const cplx *row = mat + r * d;
            for (std::size_t c = 0; c < d; ++c) {
                acc += row[c] * g[c];
            }
            psi[base + off[r]] = acc;
        }
    }
}

void apply_sparse2_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const Sparse2 &rows) {
    unsigned sorted[kMaxBlockQubits];
    detail::check_block(n, qubits, k, sorted);
    const std::size_t d = std::size_t{1} << k;
    std::size_t off[std::size_t{1} << kMaxBlockQubits];
    detail::block_offsets(qubits, k, off);
    cplx g[std::size_t{1} << kMaxBlockQubits];
    const std::size_t bases = n >> k;
    for (std::size_t b = 0; b < bases; ++b) {
        const std::size_t base = detail::insert_zero_bits(b, sorted, k);
        for (std::size_t c = 0; c < d; ++c) {
            g[c] = psi[base + off[c]];
        }
        for (std::size_t r = 0; r < d; ++r) {
            psi[base + off[r]] = rows.val0[r] * g[rows.col0[r]] + rows.val1[r] * g[rows.col1[r]];
        }
    }
}

void axpby(cplx a, const cplx *x, cplx b, const cplx *y, cplx *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

double squared_norm(const cplx *x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += std::norm(x[i]);
    }
    return s;
}

}  // namespace scalar

}  // namespace symprot::kernels
