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

// Lattice Schwinger model written directly from its defining formulas, as a
// sum of tensor-product operators over the factor list
//   site 1, link 1, site 2, link 2, ..., site n     (first factor most significant)
// Sites are 1-based here to keep the staggering signs literal.

#pragma once

#include <vector>

#include "oracles.hpp"

namespace oracle {

struct ProductTerm {
    cplx coef;
    std::vector<std::pair<int, Mat>> ops;  // (factor, local matrix)
};

struct SchwingerOracle {
    int n = 0;
    int cutoff = 0;
    std::vector<int> dims;
    std::vector<ProductTerm> terms;

    int site_factor(int i) const { return 2 * (i - 1); }  // i in 1..n
    int link_factor(int l) const { return 2 * l - 1; }    // l in 1..n-1

    std::size_t dim() const {
        std::size_t d = 1;
        for (int x : dims) {
            d *= static_cast<std::size_t>(x);
        }
        return d;
    }

    /// Digits of a basis index, factor 0 first.
    std::vector<int> digits(std::size_t index) const {
        std::vector<int> out(dims.size());
        for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
            out[f] = static_cast<int>(index % static_cast<std::size_t>(dims[f]));
            index /= static_cast<std::size_t>(dims[f]);
        }
        return out;
    }

    /// Electric field on link l (0 for the boundary links 0 and n).
    int field(const std::vector<int> &dig, int l) const {
        if (l <= 0 || l >= n) {
            return 0;
        }
        return dig[link_factor(l)] - cutoff;
    }
    /// Z eigenvalue of site i.
    int z(const std::vector<int> &dig, int i) const { return dig[site_factor(i)] == 0 ? 1 : -1; }
    /// Twice the charge, 2 Q_i = -Z_i + (-1)^i.
    int twice_q(const std::vector<int> &dig, int i) const { return -z(dig, i) + (i % 2 == 0 ? 1 : -1); }
    /// G_i = F_i - F_{i-1} - Q_i, doubled to stay integral.
    int twice_gauss(const std::vector<int> &dig, int i) const {
        return 2 * (field(dig, i) - field(dig, i - 1)) - twice_q(dig, i);
    }

    Mat dense() const {
        const auto d = static_cast<Eigen::Index>(dim());
        Mat h = Mat::Zero(d, d);
        for (const auto &t : terms) {
            h += t.coef * embed(dims, t.ops);
        }
        return h;
    }

    cplx element(std::size_t row, std::size_t col) const {
        const auto dr = digits(row), dc = digits(col);
        cplx sum = 0.0;
        for (const auto &t : terms) {
            cplx v = t.coef;
            std::vector<bool> touched(dims.size(), false);
            for (const auto &[f, m] : t.ops) {
                touched[f] = true;
                v *= m(dr[f], dc[f]);
            }
            for (std::size_t f = 0; f < dims.size() && v != cplx(0.0); ++f) {
                if (!touched[f] && dr[f] != dc[f]) {
                    v = 0.0;
                }
            }
            sum += v;
        }
        return sum;
    }
};

struct LinkMatrices {
    Mat F, U, A, B;
};

inline LinkMatrices link_matrices(int cutoff) {
    const int D = 2 * cutoff;
    LinkMatrices m;
    m.F = Mat::Zero(D, D);
    m.U = Mat::Zero(D, D);
    for (int u = 0; u < D; ++u) {
        m.F(u, u) = u - cutoff;
    }
    // |j+1><j| for j = -L..L-2, plus the wrap |-L><L-1|.
    for (int u = 0; u + 1 < D; ++u) {
        m.U(u + 1, u) = 1.0;
    }
    m.U(0, D - 1) = 1.0;
    // X and Y on the lowest-order qubit of the link register.
    const Mat id = Mat::Identity(D / 2, D / 2);
    m.A = kron(id, X());
    m.B = kron(id, Y());
    return m;
}

inline SchwingerOracle schwinger(int n, int cutoff, double x, double mu) {
    SchwingerOracle o;
    o.n = n;
    o.cutoff = cutoff;
    for (int i = 1; i <= n; ++i) {
        o.dims.push_back(2);
        if (i < n) {
            o.dims.push_back(2 * cutoff);
        }
    }
    const LinkMatrices lm = link_matrices(cutoff);
    const cplx I(0.0, 1.0);
    for (int l = 1; l < n; ++l) {
        o.terms.push_back({1.0, {{o.link_factor(l), lm.F * lm.F}}});
    }
    for (int i = 1; i <= n; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        o.terms.push_back({-0.5 * mu * sign, {{o.site_factor(i), Z()}}});
    }
    for (int l = 1; l < n; ++l) {
        const Mat plus = lm.U + lm.U.adjoint();
        const Mat minus = I * (lm.U - lm.U.adjoint());
        const int a = o.site_factor(l), b = o.site_factor(l + 1), f = o.link_factor(l);
        o.terms.push_back({x / 4.0, {{f, plus}, {a, X()}, {b, X()}}});
        o.terms.push_back({x / 4.0, {{f, plus}, {a, Y()}, {b, Y()}}});
        o.terms.push_back({x / 4.0, {{f, minus}, {a, X()}, {b, Y()}}});
        o.terms.push_back({-x / 4.0, {{f, minus}, {a, Y()}, {b, X()}}});
    }
    return o;
}

}  // namespace oracle
