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

#pragma once

// State-vector kernels. Every kernel has a portable scalar reference in
// namespace `scalar` and an AVX2+FMA variant in namespace `avx2`; the
// unqualified entry points dispatch on the active ISA.
//
// Bit convention: a block acting on k qubits takes `qubits[j]` as the global
// bit position of local bit j, so local index l maps to the global offset
// sum_j ((l >> j) & 1) << qubits[j].

#include <cstddef>
#include <cstdint>

#include "symprot/common.hpp"

namespace symprot::kernels {

inline constexpr unsigned kMaxBlockQubits = 6;

enum class Isa { scalar, avx2 };

const char *isa_name(Isa isa);
bool cpu_supports_avx2();
bool compiled_with_avx2();

/// ISA used by the dispatching entry points. Defaults to the best supported
/// one; SYMPROT_ISA=scalar|avx2 overrides at first use.
Isa active_isa();
/// Throws DomainError when the requested ISA is unavailable.
void set_active_isa(Isa isa);

/// Two nonzeros per row: row r holds val0[r] at col0[r] and val1[r] at col1[r].
struct Sparse2 {
    const std::uint32_t *col0;
    const std::uint32_t *col1;
    const cplx *val0;
    const cplx *val1;
};

#define SYMPROT_KERNEL_DECLS                                                                               \
    void mul_diagonal(cplx *psi, const cplx *diag, std::size_t n);                                          \
    void apply_dense_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const cplx *mat); \
    void apply_sparse2_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k,                 \
                             const Sparse2 &rows);                                                          \
    void axpby(cplx a, const cplx *x, cplx b, const cplx *y, cplx *out, std::size_t n);                     \
    double squared_norm(const cplx *x, std::size_t n);

// psi[i] *= diag[i]
// apply_dense_block: psi <- M psi on the k-qubit block, M row-major 2^k x 2^k
// apply_sparse2_block: same with a two-nonzeros-per-row M
// axpby: out = a x + b y (out may alias x or y)
SYMPROT_KERNEL_DECLS

namespace scalar {
SYMPROT_KERNEL_DECLS
}

namespace avx2 {
SYMPROT_KERNEL_DECLS
}

#undef SYMPROT_KERNEL_DECLS

namespace detail {

/// Offsets of the 2^k local basis states relative to a block base index.
void block_offsets(const unsigned *qubits, unsigned k, std::size_t *offsets);

/// Base index number i (0 <= i < n >> k): i with zero bits inserted at the
/// sorted block qubit positions.
inline std::size_t insert_zero_bits(std::size_t i, const unsigned *sorted_qubits, unsigned k) {
    for (unsigned j = 0; j < k; ++j) {
        const std::size_t low = i & ((std::size_t{1} << sorted_qubits[j]) - 1);
        i = ((i ^ low) << 1) | low;
    }
    return i;
}

/// Validates the block and fills sorted positions; throws DomainError.
void check_block(std::size_t n, const unsigned *qubits, unsigned k, unsigned *sorted_out);

}  // namespace detail

}  // namespace symprot::kernels
