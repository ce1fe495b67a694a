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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include "symprot/kernels.hpp"

#if defined(SYMPROT_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace symprot::kernels::avx2 {

#if defined(SYMPROT_HAVE_AVX2)

namespace {

// Two packed complex numbers: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d cfma(__m256d a, __m256d b, __m256d acc) {
    return _mm256_add_pd(acc, cmul(a, b));
}

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d load_pair(const cplx *lo, const cplx *hi) {
    return _mm256_loadu2_m128d(reinterpret_cast<const double *>(hi), reinterpret_cast<const double *>(lo));
}

inline __m256d broadcast(cplx a) {
    return _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
}

}  // namespace

void mul_diagonal(cplx *psi, const cplx *diag, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(psi + i, cmul(load2(psi + i), load2(diag + i)));
    }
    for (; i < n; ++i) {
        psi[i] *= diag[i];
    }
}

void apply_dense_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const cplx *mat) {
    unsigned sorted[kMaxBlockQubits];
    detail::check_block(n, qubits, k, sorted);
    const std::size_t d = std::size_t{1} << k;
    std::size_t off[std::size_t{1} << kMaxBlockQubits];
    detail::block_offsets(qubits, k, off);
    alignas(32) cplx g[std::size_t{1} << kMaxBlockQubits];
    const std::size_t bases = n >> k;
    for (std::size_t b = 0; b < bases; ++b) {
        const std::size_t base = detail::insert_zero_bits(b, sorted, k);
        for (std::size_t c = 0; c < d; ++c) {
            g[c] = psi[base + off[c]];
        }
        for (std::size_t r = 0; r < d; ++r) {
            const cplx *row = mat + r * d;
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t c = 0; c < d; c += 2) {
                acc = cfma(load2(row + c), load2(g + c), acc);
            }
            const __m128d sum = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
            _mm_storeu_pd(reinterpret_cast<double *>(psi + base + off[r]), sum);
        }
    }
}

void apply_sparse2_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const Sparse2 &rows) {
    unsigned sorted[kMaxBlockQubits];
    detail::check_block(n, qubits, k, sorted);
    const std::size_t d = std::size_t{1} << k;
    std::size_t off[std::size_t{1} << kMaxBlockQubits];
    detail::block_offsets(qubits, k, off);
    alignas(32) cplx g[std::size_t{1} << kMaxBlockQubits];
    const std::size_t bases = n >> k;
    for (std::size_t b = 0; b < bases; ++b) {
        const std::size_t base = detail::insert_zero_bits(b, sorted, k);
        for (std::size_t c = 0; c < d; ++c) {
            g[c] = psi[base + off[c]];
        }
        for (std::size_t r = 0; r < d; r += 2) {
            const __m256d x0 = load_pair(g + rows.col0[r], g + rows.col0[r + 1]);
            const __m256d x1 = load_pair(g + rows.col1[r], g + rows.col1[r + 1]);
            const __m256d y = cfma(load2(rows.val1 + r), x1, cmul(load2(rows.val0 + r), x0));
            _mm_storeu_pd(reinterpret_cast<double *>(psi + base + off[r]), _mm256_castpd256_pd128(y));
            _mm_storeu_pd(reinterpret_cast<double *>(psi + base + off[r + 1]), _mm256_extractf128_pd(y, 1));
        }
    }
}

void axpby(cplx a, const cplx *x, cplx b, const cplx *y, cplx *out, std::size_t n) {
    const __m256d va = broadcast(a);
    const __m256d vb = broadcast(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(out + i, cfma(vb, load2(y + i), cmul(va, load2(x + i))));
    }
    for (; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

double squared_norm(const cplx *x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        s += std::norm(x[i]);
    }
    return s;
}

#else

void mul_diagonal(cplx *psi, const cplx *diag, std::size_t n) {
    scalar::mul_diagonal(psi, diag, n);
}

void apply_dense_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const cplx *mat) {
    scalar::apply_dense_block(psi, n, qubits, k, mat);
}

void apply_sparse2_block(cplx *psi, std::size_t n, const unsigned *qubits, unsigned k, const Sparse2 &rows) {
    scalar::apply_sparse2_block(psi, n, qubits, k, rows);
}

void axpby(cplx a, const cplx *x, cplx b, const cplx *y, cplx *out, std::size_t n) {
    scalar::axpby(a, x, b, y, out, n);
}

double squared_norm(const cplx *x, std::size_t n) {
    return scalar::squared_norm(x, n);
}

#endif

}  // namespace symprot::kernels::avx2
