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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <string>

#include "models/pieces.hpp"
#include "symprot/models.hpp"

namespace symprot {

namespace {

unsigned log2_exact(std::size_t v) {
    unsigned b = 0;
    while ((std::size_t{1} << b) < v) {
        ++b;
    }
    require((std::size_t{1} << b) == v, "expected a power of two");
    return b;
}

const SchwingerInfo &schwinger_info(const HamiltonianModel &model) {
    require(model.meta().schwinger.has_value(), "operation requires a Schwinger model");
    return *model.meta().schwinger;
}

// Staggering sign (-1)^i for the 1-based site number i.
int stagger(int site0) {
    return (site0 + 1) % 2 == 0 ? 1 : -1;
}

int spin_z(std::size_t b, unsigned bit) {
    return ((b >> bit) & 1U) ? -1 : 1;
}

// Twice the charge, 2 Q_i = -Z_i + (-1)^i, kept integral.
int twice_charge(int z, int site0) {
    return -z + stagger(site0);
}

}  // namespace

LinkOperators link_operators(int cutoff) {
    require(cutoff >= 1, "cutoff must be positive");
    const Eigen::Index D = 2 * cutoff;
    LinkOperators ops;
    ops.F = Matrix::Zero(D, D);
    ops.U = Matrix::Zero(D, D);
    ops.A = Matrix::Zero(D, D);
    ops.B = Matrix::Zero(D, D);
    for (Eigen::Index u = 0; u < D; ++u) {
        ops.F(u, u) = static_cast<double>(u - cutoff);
        ops.U((u + 1) % D, u) = 1.0;
        ops.A(u ^ 1, u) = 1.0;
        ops.B(u ^ 1, u) = (u & 1) ? cplx(0, -1) : cplx(0, 1);
    }
    ops.A_tilde = ops.U.adjoint() * ops.A * ops.U;
    ops.B_tilde = ops.U.adjoint() * ops.B * ops.U;
    return ops;
}

HamiltonianModel build_schwinger(int n, int cutoff, double x, double mu) {
    require(n >= 2, "Schwinger model needs at least two sites");
    require(cutoff >= 2, "cutoff must be at least 2");
    const std::size_t levels = 2 * static_cast<std::size_t>(cutoff);
    require((levels & (levels - 1)) == 0, "2 * cutoff must be a power of two");
    const unsigned link_bits = log2_exact(levels);
    require(static_cast<unsigned>(n) + link_bits * static_cast<unsigned>(n - 1) <= 30, "register too large");

    std::vector<std::size_t> dims;
    std::vector<FactorRole> roles;
    for (int i = 0; i < n; ++i) {
        dims.push_back(2);
        roles.push_back(FactorRole::site_qubit);
        if (i + 1 < n) {
            dims.push_back(levels);
            roles.push_back(FactorRole::link_boson);
        }
    }
    Layout layout(dims);
    SchwingerInfo info;
    info.sites = n;
    info.cutoff = cutoff;
    info.x = x;
    info.mu = mu;
    info.link_bits = link_bits;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        const unsigned lsb = log2_exact(layout.stride(f));
        if (roles[f] == FactorRole::site_qubit) {
            info.site_bit.push_back(lsb);
        } else {
            info.link_lsb.push_back(lsb);
        }
    }

    const std::size_t dim = layout.dim();
    const std::size_t link_mask = levels - 1;
    std::vector<Term> terms;
    {
        Term h0;
        h0.label = "H0";
        h0.diagonal.assign(dim, 0.0);
        for (std::size_t b = 0; b < dim; ++b) {
            double e = 0.0;
            for (int l = 0; l + 1 < n; ++l) {
                const double F = static_cast<double>((b >> info.link_lsb[l]) & link_mask) - cutoff;
                e += F * F;
            }
            for (int i = 0; i < n; ++i) {
                e -= 0.5 * mu * stagger(i) * spin_z(b, info.site_bit[i]);
            }
            h0.diagonal[b] = e;
        }
        terms.push_back(std::move(h0));
    }

    const LinkOperators link = link_operators(cutoff);
    const Matrix X = pauli::X();
    const Matrix Y = pauli::Y();
    std::vector<unsigned> reg_bits(link_bits);
    for (int l = 0; l + 1 < n; ++l) {
        for (unsigned j = 0; j < link_bits; ++j) {
            reg_bits[j] = info.link_lsb[l] + j;
        }
        const std::vector<unsigned> si{info.site_bit[l]};
        const std::vector<unsigned> sj{info.site_bit[l + 1]};
        const std::vector<unsigned> lsb{info.link_lsb[l]};
        struct Spec {
            const char *name;
            bool tilde;
            Matrix link_op;
            Matrix left, right;
            double sign;
        };
        const Spec specs[8] = {
            {"AXX", false, X, X, X, 1.0},                   {"AtXX", true, link.A_tilde, X, X, 1.0},
            {"AYY", false, X, Y, Y, 1.0},                   {"AtYY", true, link.A_tilde, Y, Y, 1.0},
            {"BXY", false, Y, X, Y, 1.0},                   {"BtXY", true, link.B_tilde, X, Y, 1.0},
            {"BYX", false, Y, Y, X, -1.0},                  {"BtYX", true, link.B_tilde, Y, X, -1.0},
        };
        for (const Spec &s : specs) {
            Term t;
            t.label = std::string(s.name) + "_" + std::to_string(l + 1);
            t.pieces.push_back(detail::make_piece(
                {{si, s.left}, {s.tilde ? reg_bits : lsb, s.link_op}, {sj, s.right}}, s.sign * x / 4.0));
            terms.push_back(std::move(t));
        }
    }

    ModelMeta meta;
    meta.kind = "schwinger";
    meta.n = n;
    meta.schwinger = info;
    return HamiltonianModel(std::move(layout), std::move(roles), std::move(terms), std::move(meta));
}

std::vector<DiagonalOperator> gauge_operators(const HamiltonianModel &model) {
    const SchwingerInfo &info = schwinger_info(model);
    const int n = info.sites;
    const std::size_t dim = model.dim();
    const std::size_t link_mask = (std::size_t{1} << info.link_bits) - 1;
    std::vector<DiagonalOperator> out;
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            auto field = [&](int link) -> int {
                if (link < 0 || link >= n - 1) {
                    return 0;
                }
                return static_cast<int>((b >> info.link_lsb[link]) & link_mask) - info.cutoff;
            };
            const int q2 = twice_charge(spin_z(b, info.site_bit[i]), i);
            // Link i sits to the right of site i, link i-1 to the left.
            v[b] = static_cast<double>(field(i) - field(i - 1)) - 0.5 * q2;
        }
        out.emplace_back(model.layout(), std::move(v));
    }
    return out;
}

PhysicalSubspace physical_projector(const HamiltonianModel &model) {
    const SchwingerInfo &info = schwinger_info(model);
    const int n = info.sites;
    std::vector<std::size_t> basis;
    for (std::size_t spins = 0; spins < (std::size_t{1} << n); ++spins) {
        std::size_t index = 0;
        int field = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const unsigned bit = (spins >> i) & 1U;
            index |= static_cast<std::size_t>(bit) << info.site_bit[i];
            const int q2 = twice_charge(bit ? -1 : 1, i);
            field += q2 / 2;
            if (i + 1 < n) {
                ok = field >= -info.cutoff && field <= info.cutoff - 1;
                index |= static_cast<std::size_t>(field + info.cutoff) << info.link_lsb[i];
            } else {
                ok = field == 0;
            }
        }
        if (ok) {
            basis.push_back(index);
        }
    }
    std::sort(basis.begin(), basis.end());
    std::vector<double> diag(model.dim(), 0.0);
    for (std::size_t b : basis) {
        diag[b] = 1.0;
    }
    return PhysicalSubspace{std::move(basis), DiagonalOperator(model.layout(), std::move(diag))};
}

GroundState ground_state_physical(const HamiltonianModel &model) {
    const PhysicalSubspace phys = physical_projector(model);
    const auto p = static_cast<Eigen::Index>(phys.dim_phys());
    require(p >= 1, "physical subspace is empty");
    Matrix h(p, p);
    Vector e = Vector::Zero(static_cast<Eigen::Index>(model.dim()));
    for (Eigen::Index c = 0; c < p; ++c) {
        e.setZero();
        e(static_cast<Eigen::Index>(phys.basis_indices[c])) = 1.0;
        const Vector col = model.apply(e);
        for (Eigen::Index r = 0; r < p; ++r) {
            h(r, c) = col(static_cast<Eigen::Index>(phys.basis_indices[r]));
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("restricted eigensolver did not converge");
    }
    GroundState gs;
    gs.energy = solver.eigenvalues()(0);
    gs.degenerate = p > 1 && solver.eigenvalues()(1) - solver.eigenvalues()(0) <= 1e-10;
    Vector v = solver.eigenvectors().col(0);
    // Deterministic global phase: the largest component is real and positive.
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < p; ++i) {
        if (std::abs(v(i)) > std::abs(v(arg)) + 1e-12) {
            arg = i;
        }
    }
    v *= std::conj(v(arg)) / std::abs(v(arg));
    Vector full = Vector::Zero(static_cast<Eigen::Index>(model.dim()));
    for (Eigen::Index i = 0; i < p; ++i) {
        full(static_cast<Eigen::Index>(phys.basis_indices[i])) = v(i);
    }
    full.normalize();
    gs.state = StateVec(model.layout(), std::move(full));
    return gs;
}

}  // namespace symprot
