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
#include <limits>

#include "symprot/bounds.hpp"

namespace symprot {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Matrix power(const Matrix &a, std::size_t r) {
    Matrix result = Matrix::Identity(a.rows(), a.cols());
    Matrix base = a;
    while (r > 0) {
        if (r & 1U) {
            result = base * result;
        }
        r >>= 1;
        if (r > 0) {
            base = base * base;
        }
    }
    return result;
}

Matrix hermitian_part(const Matrix &a) {
    return 0.5 * (a + a.adjoint());
}

void check_pair(const Operator &g, const Operator &kick) {
    require(g.dim() == kick.dim(), "G and the kick must have the same dimension");
    require(g.dim() <= kDenseDimCap, "dimension exceeds the dense cap");
    require(kick.is_unitary(1e-9), "kick must be unitary");
}

ZenoBound from_spectrum(const KickSpectrum &spec) {
    ZenoBound b;
    b.m = spec.m;
    if (spec.m >= 2 && spec.xi) {
        b.xi = *spec.xi;
    } else {
        b.defined = false;
        b.xi = kNaN;
        b.value = kNaN;
    }
    return b;
}

}  // namespace

double zeno_bound_new_value(double xi, std::size_t m, double g_norm, double t, std::size_t r, LogBase base) {
    require(r >= 2, "Zeno bounds need r >= 2");
    const double c = xi * std::sqrt(static_cast<double>(m));
    const auto rr = static_cast<double>(r);
    return 2.0 * c * g_norm * g_norm * t * t * log_r(r, base) / rr + c * g_norm * t / rr;
}

double zeno_bound_sp_value(double xi, std::size_t m, double g_norm, double v_norm, double t, std::size_t r,
                           LogBase base) {
    require(r >= 2, "Zeno bounds need r >= 2");
    const double c = xi * std::sqrt(static_cast<double>(m));
    const auto rr = static_cast<double>(r);
    return 2.0 * c * g_norm * v_norm * t * t * log_r(r, base) / rr + c * v_norm * t / rr;
}

double zeno_bound_old_value(double xi, std::size_t m, double g_norm, double t, std::size_t r) {
    require(r >= 1, "Zeno bounds need r >= 1");
    const auto md = static_cast<double>(m);
    return xi * md * md * g_norm * t * (1.0 + 2.0 * std::exp(md * g_norm * t)) / static_cast<double>(r);
}

double lemma2_bound_value(double xi, std::size_t m, double h_norm, double v_norm, double t, std::size_t r,
                          LogBase base) {
    require(r >= 1, "Zeno bounds need r >= 1");
    return 2.0 * xi * std::sqrt(static_cast<double>(m)) * (h_norm + v_norm) * v_norm * t * t * log_r(r, base) /
           static_cast<double>(r);
}

ZenoBound zeno_bound_new(const Operator &g, const Operator &kick, double t, std::size_t r, LogBase base) {
    check_pair(g, kick);
    ZenoBound b = from_spectrum(kick_spectrum(kick));
    if (b.defined) {
        b.value = zeno_bound_new_value(b.xi, b.m, spectral_norm(g), t, r, base);
    }
    return b;
}

ZenoBound zeno_bound_sp(const Operator &h, const Operator &v, const Operator &kick, double t, std::size_t r,
                        LogBase base) {
    check_pair(h, kick);
    require(v.dim() == h.dim(), "H and V must have the same dimension");
    require(spectral_norm(commutator(h, kick)) <= 1e-10, "H must commute with the kick");
    ZenoBound b = from_spectrum(kick_spectrum(kick));
    if (b.defined) {
        b.value = zeno_bound_sp_value(b.xi, b.m, spectral_norm(h + v), spectral_norm(v), t, r, base);
    }
    return b;
}

ZenoBound zeno_bound_old(const Operator &g, const Operator &kick, double t, std::size_t r) {
    check_pair(g, kick);
    ZenoBound b = from_spectrum(kick_spectrum(kick));
    if (b.defined) {
        b.value = zeno_bound_old_value(b.xi, b.m, spectral_norm(g), t, r);
    }
    return b;
}

Operator zeno_generator(const Operator &g, const KickSpectrum &spectrum) {
    const auto D = static_cast<Eigen::Index>(g.dim());
    Matrix out = Matrix::Zero(D, D);
    for (const Operator &p : spectrum.projectors) {
        out += p.matrix() * g.matrix() * p.matrix();
    }
    return Operator(g.layout(), std::move(out));
}

double zeno_error_measured(const Operator &g, const Operator &kick, double t, std::size_t r) {
    check_pair(g, kick);
    require(r >= 1, "Zeno evolution needs r >= 1");
    require(g.is_hermitian(1e-10), "G must be Hermitian");
    const KickSpectrum spec = kick_spectrum(kick);
    const Operator gz(g.layout(), hermitian_part(zeno_generator(g, spec).matrix()));
    const Operator gh(g.layout(), hermitian_part(g.matrix()));
    const Matrix step = kick.matrix() * expm_hermitian(gh, t / static_cast<double>(r)).matrix();
    const Matrix lhs = power(Matrix(kick.matrix().adjoint()), r) * power(step, r);
    return spectral_norm(Matrix(lhs - expm_hermitian(gz, t).matrix()));
}

double ergodic_deviation(const Operator &u, const Operator &g, std::size_t r) {
    require(u.dim() == g.dim(), "U and G must have the same dimension");
    require(u.is_unitary(1e-9), "U must be unitary");
    require(r >= 1, "averaging needs r >= 1");
    const Matrix &um = u.matrix();
    Matrix x = g.matrix();
    Matrix sum = Matrix::Zero(x.rows(), x.cols());
    for (std::size_t k = 1; k <= r; ++k) {
        x = um * x * um.adjoint();
        sum += x;
    }
    sum /= static_cast<double>(r);
    return spectral_norm(Matrix(sum - zeno_generator(g, kick_spectrum(u)).matrix()));
}

}  // namespace symprot
