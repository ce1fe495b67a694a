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

#include <atomic>
#include <cstdlib>
#include <string>

#include "symprot/kernels.hpp"

namespace symprot::kernels {

const char *isa_name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool compiled_with_avx2() {
#if defined(SYMPROT_HAVE_AVX2)
    return true;
#else
    return false;
#endif
}

bool cpu_supports_avx2() {
#if defined(SYMPROT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Isa initial_isa() {
    const bool avx2_ok = compiled_with_avx2() && cpu_supports_avx2();
    if (const char *env = std::getenv("SYMPROT_ISA")) {
        const std::string v(env);
        if (v == "scalar") {
            return Isa::scalar;
        }
        if (v == "avx2" && avx2_ok) {
            return Isa::avx2;
        }
    }
    return avx2_ok ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa> &isa_slot() {
    static std::atomic<Isa> slot{initial_isa()};
    return slot;
}

}  // namespace

Isa active_isa() {
    return isa_slot().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa) {
    if (isa == Isa::avx2) {
        require(compiled_with_avx2() && cpu_supports_avx2(), "AVX2 kernels are not available on this machine");
    }
    isa_slot().store(isa, std::memory_order_relaxed);
}

void mul_diagonal(cplx *psi, const cplx *diag, std::size_t n) {
    if (active_isa() == Isa::avx2) {
        avx2::mul_diagonal(psi, diag, n);
    } else {
        scalar::mul_diagonal(psi, diag, n);
    }
}

void apply_dense_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const cplx *mat) {
    if (active_isa() == Isa::avx2) {
        avx2::apply_dense_block(psi, n, qubits, k, mat);
    } else {
        scalar::apply_dense_block(psi, n, qubits, k, mat);
    }
}

void apply_sparse2_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const Sparse2 &rows) {
    if (active_isa() == Isa::avx2) {
        avx2::apply_sparse2_block(psi, n, qubits, k, rows);
    } else {
        scalar::apply_sparse2_block(psi, n, qubits, k, rows);
    }
}

void axpby(cplx a, const cplx *x, cplx b, const cplx *y, cplx *out, std::size_t n) {
    if (active_isa() == Isa::avx2) {
        avx2::axpby(a, x, b, y, out, n);
    } else {
        scalar::axpby(a, x, b, y, out, n);
    }
}

double squared_norm(const cplx *x, std::size_t n) {
    return active_isa() == Isa::avx2 ? avx2::squared_norm(x, n) : scalar::squared_norm(x, n);
}

}  // namespace symprot::kernels
