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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "schwinger_oracle.hpp"
#include "symprot/models.hpp"
#include "symprot/rng.hpp"

namespace symprot {
namespace {

using oracle::Mat;

double max_diff(const Mat &a, const Mat &b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat heisenberg_oracle_term(int n, const std::vector<std::tuple<int, int, double>> &bonds, const Mat &p) {
    Mat h = Mat::Zero(1 << n, 1 << n);
    for (const auto &[i, j, J] : bonds) {
        h += J * oracle::pauli_string(n, {{i, p}, {j, p}});
    }
    return h;
}

TEST(RandomHeisenberg, MatchesPauliOracle) {
    for (int n : {2, 3, 4}) {
        const HamiltonianModel m = build_random_heisenberg(n, 17 + static_cast<std::uint64_t>(n));
        ASSERT_EQ(m.num_terms(), 3U);
        EXPECT_EQ(m.terms()[0].label, "H_X");
        EXPECT_EQ(m.terms()[2].label, "H_Z");
        // Couplings drawn lexicographically from the seed.
        Rng rng(17 + static_cast<std::uint64_t>(n));
        std::vector<std::tuple<int, int, double>> bonds;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                bonds.emplace_back(i, j, rng.uniform(-1.0, 1.0));
            }
        }
        const Mat paulis[3] = {oracle::X(), oracle::Y(), oracle::Z()};
        for (int a = 0; a < 3; ++a) {
            EXPECT_LT(max_diff(m.dense_term(a).matrix(), heisenberg_oracle_term(n, bonds, paulis[a])), 1e-14);
        }
    }
}

TEST(RandomHeisenberg, BasicShape) {
    const HamiltonianModel m = build_random_heisenberg(4, 1);
    const Operator h = m.dense_total();
    EXPECT_EQ(h.dim(), 16U);
    EXPECT_TRUE(h.is_hermitian());
    EXPECT_NEAR(std::abs(h.matrix().trace()), 0.0, 1e-13);
    // n = 2: the three terms commute pairwise.
    const HamiltonianModel m2 = build_random_heisenberg(2, 3);
    const auto t = m2.dense_terms();
    EXPECT_LT(commutator(t[0], t[1]).max_abs(), 1e-14);
    EXPECT_LT(commutator(t[1], t[2]).max_abs(), 1e-14);
}

TEST(RandomHeisenberg, GlobalSu2Invariance) {
    const HamiltonianModel m = build_random_heisenberg(4, 5);
    const Mat h = m.dense_total().matrix();
    for (unsigned long s = 0; s < 20; ++s) {
        const Mat w = oracle::random_unitary(2, 1000 + s);
        Mat c = Mat::Identity(1, 1);
        for (int i = 0; i < 4; ++i) {
            c = oracle::kron(c, w);
        }
        EXPECT_LE((c * h - h * c).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(MblHeisenberg, MatchesPauliOracle) {
    const int n = 5;
    const HamiltonianModel m = build_mbl_heisenberg(n, 2.0, 77);
    Rng rng(77);
    std::vector<double> fields;
    for (int i = 0; i < n; ++i) {
        fields.push_back(rng.uniform(-2.0, 2.0));
    }
    std::vector<std::tuple<int, int, double>> bonds;
    for (int i = 0; i < n; ++i) {
        bonds.emplace_back(i, (i + 1) % n, 1.0);
    }
    Mat hz = heisenberg_oracle_term(n, bonds, oracle::Z());
    for (int i = 0; i < n; ++i) {
        hz += fields[i] * oracle::pauli_string(n, {{i, oracle::Z()}});
    }
    EXPECT_LT(max_diff(m.dense_term(0).matrix(), heisenberg_oracle_term(n, bonds, oracle::X())), 1e-14);
    EXPECT_LT(max_diff(m.dense_term(1).matrix(), heisenberg_oracle_term(n, bonds, oracle::Y())), 1e-14);
    EXPECT_LT(max_diff(m.dense_term(2).matrix(), hz), 1e-14);
    for (double f : m.meta().fields) {
        EXPECT_LE(std::abs(f), 2.0);
    }
}

TEST(MblHeisenberg, U1Invariance) {
    for (double h : {0.0, 2.0}) {
        const HamiltonianModel m = build_mbl_heisenberg(4, h, 9);
        const Mat hm = m.dense_total().matrix();
        const DiagonalOperator sz = total_sz(4);
        std::mt19937_64 gen(4);
        std::uniform_real_distribution<double> u(0.0, 2 * kPi);
        for (int s = 0; s < 20; ++s) {
            const double phi = u(gen);
            Mat c = Mat::Zero(16, 16);
            for (int b = 0; b < 16; ++b) {
                c(b, b) = std::polar(1.0, -phi * sz[static_cast<std::size_t>(b)]);
            }
            EXPECT_LE(oracle::norm2(c * hm - hm * c), 1e-12);
        }
    }
}

TEST(MblHeisenberg, GroundEnergyMatchesOracle) {
    const HamiltonianModel m = build_mbl_heisenberg(4, 2.0, 12);
    Eigen::SelfAdjointEigenSolver<Mat> a(m.dense_total().matrix());
    Rng rng(12);
    std::vector<double> f;
    for (int i = 0; i < 4; ++i) {
        f.push_back(rng.uniform(-2.0, 2.0));
    }
    std::vector<std::tuple<int, int, double>> bonds;
    for (int i = 0; i < 4; ++i) {
        bonds.emplace_back(i, (i + 1) % 4, 1.0);
    }
    Mat h = heisenberg_oracle_term(4, bonds, oracle::X()) + heisenberg_oracle_term(4, bonds, oracle::Y()) +
            heisenberg_oracle_term(4, bonds, oracle::Z());
    for (int i = 0; i < 4; ++i) {
        h += f[i] * oracle::pauli_string(4, {{i, oracle::Z()}});
    }
    Eigen::SelfAdjointEigenSolver<Mat> b(h);
    EXPECT_NEAR(a.eigenvalues()(0), b.eigenvalues()(0), 1e-12);
}

TEST(Models, TermSumAndHermiticity) {
    const std::vector<HamiltonianModel> models = {build_random_heisenberg(3, 1), build_mbl_heisenberg(4, 1.0, 2),
                                                  build_schwinger(3, 2, 0.6, 0.1)};
    for (const auto &m : models) {
        Operator sum = Operator::zero(m.layout());
        for (const auto &t : m.dense_terms()) {
            EXPECT_TRUE(t.is_hermitian());
            sum = sum + t;
        }
        EXPECT_LE(sum.max_abs_diff(m.dense_total()), 1e-12) << m.meta().kind;
    }
}

TEST(Models, ApplyMatchesDense) {
    const std::vector<HamiltonianModel> models = {build_random_heisenberg(4, 1), build_mbl_heisenberg(5, 3.0, 2),
                                                  build_schwinger(3, 2, 0.6, 0.1)};
    for (const auto &m : models) {
        const Vector psi = oracle::random_state(static_cast<Eigen::Index>(m.dim()), 3);
        EXPECT_LT((m.apply(psi) - m.dense_total().matrix() * psi).cwiseAbs().maxCoeff(), 1e-12);
        for (std::size_t i = 0; i < m.num_terms(); ++i) {
            EXPECT_LT((m.apply_term(i, psi) - m.dense_term(i).matrix() * psi).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Models, ConstructionErrors) {
    EXPECT_THROW(build_random_heisenberg(1, 0), DomainError);
    EXPECT_THROW(build_random_heisenberg(14, 0), DomainError);
    EXPECT_THROW(build_mbl_heisenberg(2, 1.0, 0), DomainError);
    EXPECT_THROW(build_mbl_heisenberg(4, -1.0, 0), DomainError);
    EXPECT_THROW(build_schwinger(1, 2, 0.6, 0.1), DomainError);
    EXPECT_THROW(build_schwinger(3, 3, 0.6, 0.1), DomainError);
    EXPECT_THROW(build_schwinger(3, 1, 0.6, 0.1), DomainError);
    EXPECT_THROW(gauge_operators(build_random_heisenberg(3, 0)), DomainError);
    EXPECT_THROW(physical_projector(build_mbl_heisenberg(3, 1.0, 0)), DomainError);
}

TEST(Models, DenseCapEnforced) {
    // 16 * 16^3 exceeds the cap; the term descriptors still exist.
    const HamiltonianModel m = build_schwinger(4, 8, 0.6, 0.1);
    EXPECT_EQ(m.dim(), 65536U);
    EXPECT_THROW(m.dense_total(), DomainError);
    EXPECT_THROW(m.dense_term(0), DomainError);
}

TEST(Models, JsonDescribesModel) {
    const auto j = model_to_json(build_mbl_heisenberg(4, 2.0, 5));
    EXPECT_EQ(j["kind"], "mbl");
    EXPECT_EQ(j["n"], 4);
}

TEST(Schwinger, LinkIdentities) {
    for (int cutoff : {2, 4}) {
        const oracle::LinkMatrices o = oracle::link_matrices(cutoff);
        const cplx I(0, 1);
        const Mat At = o.U.adjoint() * o.A * o.U, Bt = o.U.adjoint() * o.B * o.U;
        EXPECT_LT(max_diff(o.U + o.U.adjoint(), o.A + At), 1e-15);
        EXPECT_LT(max_diff(I * (o.U - o.U.adjoint()), o.B + Bt), 1e-15);
        // The library's link operators are the same matrices.
        const LinkOperators lib = link_operators(cutoff);
        EXPECT_LT(max_diff(lib.F, o.F), 1e-15);
        EXPECT_LT(max_diff(lib.U, o.U), 1e-15);
        EXPECT_LT(max_diff(lib.A, o.A), 1e-15);
        EXPECT_LT(max_diff(lib.B, o.B), 1e-15);
        EXPECT_LT(max_diff(lib.A_tilde, At), 1e-15);
        EXPECT_LT(max_diff(lib.B_tilde, Bt), 1e-15);
    }
}

TEST(Schwinger, MatchesKronOracle) {
    for (auto [n, cutoff] : {std::pair{2, 2}, std::pair{3, 2}}) {
        const HamiltonianModel m = build_schwinger(n, cutoff, 0.6, 0.1);
        const oracle::SchwingerOracle o = oracle::schwinger(n, cutoff, 0.6, 0.1);
        ASSERT_EQ(m.dim(), o.dim());
        EXPECT_LT(max_diff(m.dense_total().matrix(), o.dense()), 1e-13) << "n=" << n;
        // H0 is the first term and strictly diagonal.
        const Mat h0 = m.dense_term(0).matrix();
        EXPECT_EQ((h0 - Mat(h0.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ(m.num_terms(), 1U + 8U * static_cast<std::size_t>(n - 1));
    }
}

TEST(Schwinger, PaperSizeLayout) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    EXPECT_EQ(m.dim(), 8192U);
    EXPECT_EQ(m.layout().num_factors(), 7U);
    EXPECT_EQ(m.roles()[1], FactorRole::link_boson);
}

TEST(Schwinger, GaugeOperatorsMatchOracle) {
    const HamiltonianModel m = build_schwinger(3, 2, 0.6, 0.1);
    const oracle::SchwingerOracle o = oracle::schwinger(3, 2, 0.6, 0.1);
    const auto g = gauge_operators(m);
    ASSERT_EQ(g.size(), 3U);
    for (std::size_t b = 0; b < m.dim(); ++b) {
        const auto dig = o.digits(b);
        for (int i = 1; i <= 3; ++i) {
            EXPECT_EQ(2.0 * g[i - 1][b], o.twice_gauss(dig, i));
        }
    }
}

TEST(Schwinger, Z2LambdaInvarianceFullSpace) {
    for (auto [n, cutoff] : {std::pair{3, 2}, std::pair{3, 4}}) {
        const HamiltonianModel m = build_schwinger(n, cutoff, 0.6, 0.1);
        const Mat h = m.dense_total().matrix();
        const auto g = gauge_operators(m);
        std::mt19937_64 gen(8);
        for (int trial = 0; trial < 5; ++trial) {
            Eigen::VectorXcd d(static_cast<Eigen::Index>(m.dim()));
            std::vector<int> mm(n);
            for (int i = 0; i < n; ++i) {
                mm[i] = static_cast<int>(gen() % (2 * cutoff));
            }
            for (std::size_t b = 0; b < m.dim(); ++b) {
                double phase = 0;
                for (int i = 0; i < n; ++i) {
                    phase += mm[i] * kPi / cutoff * g[i][b];
                }
                d(static_cast<Eigen::Index>(b)) = std::polar(1.0, -phase);
            }
            const Mat c = d.asDiagonal();
            EXPECT_LE(oracle::norm2(c * h - h * c), 1e-10);
        }
    }
}

TEST(Schwinger, U1InvarianceOnPhysicalSubspace) {
    // Lambda = 4 > n/2 + 1 for n = 3.
    const HamiltonianModel m = build_schwinger(3, 4, 0.6, 0.1);
    const Mat h = m.dense_total().matrix();
    const auto g = gauge_operators(m);
    const PhysicalSubspace phys = physical_projector(m);
    const Mat p = phys.projector.dense().matrix();
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    bool full_space_breaks = false;
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXcd d(static_cast<Eigen::Index>(m.dim()));
        std::vector<double> phi = {u(gen), u(gen), u(gen)};
        for (std::size_t b = 0; b < m.dim(); ++b) {
            double phase = 0;
            for (int i = 0; i < 3; ++i) {
                phase += phi[i] * g[i][b];
            }
            d(static_cast<Eigen::Index>(b)) = std::polar(1.0, -phase);
        }
        const Mat c = d.asDiagonal();
        EXPECT_LE(oracle::norm2(p * (c * h - h * c) * p), 1e-10);
        full_space_breaks |= oracle::norm2(c * h - h * c) > 1e-6;
    }
    // Generic U(1) angles do not commute on the full truncated space.
    EXPECT_TRUE(full_space_breaks);
}

TEST(Schwinger, PhysicalProjectorExact) {
    for (auto [n, cutoff] : {std::pair{3, 2}, std::pair{4, 4}}) {
        const HamiltonianModel m = build_schwinger(n, cutoff, 0.6, 0.1);
        const oracle::SchwingerOracle o = oracle::schwinger(n, cutoff, 0.6, 0.1);
        const PhysicalSubspace phys = physical_projector(m);
        // Brute-force joint kernel of the Gauss operators.
        std::vector<std::size_t> kernel;
        for (std::size_t b = 0; b < o.dim(); ++b) {
            const auto dig = o.digits(b);
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                ok = o.twice_gauss(dig, i) == 0;
            }
            if (ok) {
                kernel.push_back(b);
            }
        }
        EXPECT_EQ(phys.basis_indices, kernel) << "n=" << n;
        for (std::size_t b = 0; b < m.dim(); ++b) {
            const double v = phys.projector[b];
            EXPECT_TRUE(v == 0.0 || v == 1.0);
        }
        const auto g = gauge_operators(m);
        for (std::size_t b : phys.basis_indices) {
            for (const auto &gi : g) {
                EXPECT_EQ(gi[b], 0.0);
            }
        }
    }
}

TEST(Schwinger, StaggeredVacuumIsPhysical) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    const oracle::SchwingerOracle o = oracle::schwinger(4, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    // Q_i = 0: Z_i = (-1)^i, all links at F = 0 (digit = cutoff).
    std::size_t vac = 0;
    std::size_t stride = 1;
    for (int f = static_cast<int>(o.dims.size()) - 1; f >= 0; --f) {
        int digit;
        if (f % 2 == 0) {
            const int site = f / 2 + 1;
            digit = (site % 2 == 0) ? 0 : 1;  // Z = +1 for even sites, -1 for odd
        } else {
            digit = 4;
        }
        vac += static_cast<std::size_t>(digit) * stride;
        stride *= static_cast<std::size_t>(o.dims[f]);
    }
    EXPECT_TRUE(std::binary_search(phys.basis_indices.begin(), phys.basis_indices.end(), vac));
    EXPECT_EQ(phys.projector[vac], 1.0);
}

TEST(Schwinger, HamiltonianPreservesPhysicalSubspace) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    Vector e = Vector::Zero(static_cast<Eigen::Index>(m.dim()));
    double outside = 0.0;
    for (std::size_t b : phys.basis_indices) {
        e.setZero();
        e(static_cast<Eigen::Index>(b)) = 1.0;
        const Vector he = m.apply(e);
        for (Eigen::Index i = 0; i < he.size(); ++i) {
            if (phys.projector[static_cast<std::size_t>(i)] == 0.0) {
                outside = std::max(outside, std::abs(he(i)));
            }
        }
    }
    EXPECT_LE(outside, 1e-12);
}

TEST(Schwinger, GroundStateMatchesRestrictedOracle) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    const oracle::SchwingerOracle o = oracle::schwinger(4, 4, 0.6, 0.1);
    const GroundState gs = ground_state_physical(m);
    const PhysicalSubspace phys = physical_projector(m);
    const auto p = static_cast<Eigen::Index>(phys.dim_phys());
    Mat hp(p, p);
    for (Eigen::Index r = 0; r < p; ++r) {
        for (Eigen::Index c = 0; c < p; ++c) {
            hp(r, c) = o.element(phys.basis_indices[r], phys.basis_indices[c]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> solver(hp);
    EXPECT_NEAR(gs.energy, solver.eigenvalues()(0), 1e-10);
    EXPECT_FALSE(gs.degenerate);
    EXPECT_NEAR(gs.state.norm(), 1.0, 1e-12);
    // Rayleigh quotient equals the energy; no weight outside the physical subspace.
    const Vector &v = gs.state.amplitudes();
    EXPECT_NEAR(v.dot(m.apply(v)).real(), gs.energy, 1e-10);
    double out = 0;
    for (std::size_t b = 0; b < m.dim(); ++b) {
        if (phys.projector[b] == 0.0) {
            out += std::norm(v(static_cast<Eigen::Index>(b)));
        }
    }
    EXPECT_EQ(out, 0.0);
}

TEST(Schwinger, ZeroHoppingGroundStateIsBasisState) {
    const int n = 4, cutoff = 2;
    const double mu = 0.3;
    const HamiltonianModel m = build_schwinger(n, cutoff, 0.0, mu);
    const oracle::SchwingerOracle o = oracle::schwinger(n, cutoff, 0.0, mu);
    const PhysicalSubspace phys = physical_projector(m);
    std::size_t best = 0;
    double best_e = std::numeric_limits<double>::infinity();
    for (std::size_t b : phys.basis_indices) {
        const double e = o.element(b, b).real();
        if (e < best_e) {
            best_e = e;
            best = b;
        }
    }
    const GroundState gs = ground_state_physical(m);
    EXPECT_NEAR(gs.energy, best_e, 1e-12);
    EXPECT_NEAR(std::abs(gs.state.amplitudes()(static_cast<Eigen::Index>(best))), 1.0, 1e-12);
}

}  // namespace
}  // namespace symprot
