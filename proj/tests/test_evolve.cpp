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

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "symprot/evolve.hpp"

namespace symprot {
namespace {

using oracle::Mat;
using oracle::Vec;

// exp(-i dt H_j) by Taylor series, applied in slot order.
Mat slots_oracle(const std::vector<Mat> &terms, const std::vector<std::pair<std::size_t, double>> &slots) {
    Mat acc = Mat::Identity(terms[0].rows(), terms[0].cols());
    for (const auto &[j, t] : slots) {
        acc = oracle::expmi(terms[j], t) * acc;
    }
    return acc;
}

std::vector<Mat> dense_terms(const HamiltonianModel &m) {
    std::vector<Mat> out;
    for (const auto &t : m.dense_terms()) {
        out.push_back(t.matrix());
    }
    return out;
}

TEST(Slots, Pf1AndPf2Structure) {
    const auto pf1 = product_formula_slots(Algorithm::pf1, {0, 1, 2}, 0.1);
    ASSERT_EQ(pf1.size(), 3U);
    EXPECT_EQ(pf1[0].term, 0U);
    EXPECT_EQ(pf1[2].term, 2U);
    // Symmetric PF2: the innermost half-steps of the last term merge.
    const auto pf2 = pf2_slots({0, 1, 2}, 0.1);
    ASSERT_EQ(pf2.size(), 5U);
    EXPECT_EQ(pf2[0].term, 2U);
    EXPECT_DOUBLE_EQ(pf2[0].time, 0.05);
    EXPECT_EQ(pf2[2].term, 0U);
    EXPECT_DOUBLE_EQ(pf2[2].time, 0.1);
    EXPECT_EQ(pf2[4].term, 2U);
    EXPECT_THROW(product_formula_slots(Algorithm::mpf, {0, 1}, 0.1), DomainError);
}

TEST(Slots, Pf4TimesSumToDt) {
    const auto pf4 = product_formula_slots(Algorithm::pf4, {0, 1, 2}, 0.3);
    std::vector<double> per_term(3, 0.0);
    for (const auto &s : pf4) {
        per_term[s.term] += s.time;
    }
    for (double t : per_term) {
        EXPECT_NEAR(t, 0.3, 1e-15);
    }
    // Coefficient kills the third-order error: 4 k^3 + (1 - 4k)^3 = 0.
    const double k = suzuki_kappa4();
    EXPECT_NEAR(4 * k * k * k + std::pow(1 - 4 * k, 3), 0.0, 1e-14);
    EXPECT_GT(k, 0.4);
}

TEST(DenseSteps, MatchOracleProducts) {
    const HamiltonianModel m = build_random_heisenberg(3, 4);
    const auto terms = dense_terms(m);
    const double dt = 0.13;
    // S = U_3 U_2 U_1 with term 0 applied first.
    const Mat pf1 = slots_oracle(terms, {{0, dt}, {1, dt}, {2, dt}});
    EXPECT_LT((pf1_step(m, dt).matrix() - pf1).cwiseAbs().maxCoeff(), 1e-12);
    const Mat pf2 = slots_oracle(terms, {{2, dt / 2}, {1, dt / 2}, {0, dt}, {1, dt / 2}, {2, dt / 2}});
    EXPECT_LT((pf2_step(m, dt).matrix() - pf2).cwiseAbs().maxCoeff(), 1e-12);
    auto p2 = [&](double s) { return slots_oracle(terms, {{2, s / 2}, {1, s / 2}, {0, s}, {1, s / 2}, {2, s / 2}}); };
    const double k = 1.0 / (4.0 - std::cbrt(4.0));
    const Mat pf4 = p2(k * dt) * p2(k * dt) * p2((1 - 4 * k) * dt) * p2(k * dt) * p2(k * dt);
    EXPECT_LT((pf4_step(m, dt).matrix() - pf4).cwiseAbs().maxCoeff(), 1e-12);
    const Mat q = p2(dt / 4);
    const Mat mpf = (16.0 / 15.0) * q * q * q * q - (1.0 / 15.0) * p2(dt);
    EXPECT_LT((mpf_step(m, dt).matrix() - mpf).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((exact_evolution(m, dt).matrix() - oracle::expmi(m.dense_total().matrix(), dt)).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(DenseSteps, OrderOfAccuracySlopes) {
    const HamiltonianModel m = build_random_heisenberg(3, 2024);
    const DenseStepper stepper(m);
    struct Case {
        Algorithm alg;
        double expected;
        std::vector<double> dts;
    };
    const std::vector<Case> cases = {
        {Algorithm::pf1, 2.0, {0.1, 0.05, 0.025, 0.0125}},
        {Algorithm::pf2, 3.0, {0.1, 0.05, 0.025, 0.0125}},
        {Algorithm::pf4, 5.0, {0.4, 0.2, 0.1, 0.05}},
        {Algorithm::mpf, 5.0, {0.4, 0.2, 0.1, 0.05}},
    };
    for (const auto &c : cases) {
        std::vector<double> errs;
        for (double dt : c.dts) {
            errs.push_back(oracle::norm2(stepper.step(c.alg, dt).matrix() - stepper.exact(dt).matrix()));
        }
        const double slope = oracle::loglog_slope(c.dts, errs);
        EXPECT_NEAR(slope, c.expected, 0.3) << to_string(c.alg);
    }
}

TEST(DenseSteps, ParseAlgorithm) {
    EXPECT_EQ(parse_algorithm("pf4"), Algorithm::pf4);
    EXPECT_THROW(parse_algorithm("pf3"), DomainError);
}

TEST(EffectiveHamiltonian, RecoversGeneratorOfExactStep) {
    const HamiltonianModel m = build_random_heisenberg(3, 8);
    const double dt = 0.2;
    const Operator heff = effective_hamiltonian(exact_evolution(m, dt), dt);
    EXPECT_LT(heff.max_abs_diff(m.dense_total()), 1e-9);
    EXPECT_TRUE(heff.is_hermitian());
}

TEST(ProtectedDense, IdentityScheduleEqualsPlainPower) {
    const HamiltonianModel m = build_random_heisenberg(3, 1);
    EvolutionPlan plan;
    plan.dt = 0.1;
    plan.r = 7;
    plan.schedule = ProtectionSchedule::identity(7);
    const DenseRunResult res = protected_run_dense(m, plan);
    Mat s = pf1_step(m, 0.1).matrix(), p = Mat::Identity(8, 8);
    for (int i = 0; i < 7; ++i) {
        p = s * p;
    }
    EXPECT_LT((res.final_operator.matrix() - p).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(res.error, oracle::norm2(p - oracle::expmi(m.dense_total().matrix(), 0.7)), 1e-10);
}

TEST(ProtectedDense, SandwichMatchesOracle) {
    const HamiltonianModel m = build_random_heisenberg(3, 2);
    const auto sched = ProtectionSchedule::haar_su2(3, 5, 77);
    EvolutionPlan plan{Algorithm::pf2, 0.1, 5, sched, Backend::dense, std::nullopt};
    const DenseRunResult res = protected_run_dense(m, plan);
    const Mat s = pf2_step(m, 0.1).matrix();
    Mat acc = Mat::Identity(8, 8);
    for (std::size_t k = 1; k <= 5; ++k) {
        const Mat w = sched.step(k).single_qubit;
        const Mat c = oracle::kron(oracle::kron(w, w), w);
        acc = c.adjoint() * s * c * acc;
    }
    EXPECT_LT((res.final_operator.matrix() - acc).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ProtectedDense, RandomOrderingUsesPermutedProducts) {
    const HamiltonianModel m = build_random_heisenberg(3, 3);
    const auto terms = dense_terms(m);
    const auto sched = ProtectionSchedule::random_ordering(3, 4, 5);
    EvolutionPlan plan{Algorithm::pf1, 0.2, 4, sched, Backend::dense, std::nullopt};
    const DenseRunResult res = protected_run_dense(m, plan);
    Mat acc = Mat::Identity(8, 8);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto o = sched.ordering(k, 3);
        acc = slots_oracle(terms, {{o[0], 0.2}, {o[1], 0.2}, {o[2], 0.2}}) * acc;
    }
    EXPECT_LT((res.final_operator.matrix() - acc).cwiseAbs().maxCoeff(), 1e-11);
    plan.algorithm = Algorithm::pf2;
    EXPECT_THROW(protected_run_dense(m, plan), DomainError);
}

TEST(ProtectedDense, PlanValidation) {
    const HamiltonianModel m = build_random_heisenberg(3, 3);
    EvolutionPlan plan{Algorithm::pf1, 0.1, 4, ProtectionSchedule::identity(3), Backend::dense, std::nullopt};
    EXPECT_THROW(protected_run_dense(m, plan), DomainError);
    plan.schedule = ProtectionSchedule::identity(4);
    plan.dt = 0.0;
    EXPECT_THROW(protected_run_dense(m, plan), DomainError);
    plan.dt = 0.1;
    plan.noise = NoiseSpec{0.01, 1, 1};
    EXPECT_THROW(protected_run_dense(m, plan), DomainError);
}

TEST(ProtectedDense, TelescopingLeavesExactEvolutionUnchanged) {
    const HamiltonianModel m = build_random_heisenberg(4, 6);
    const DenseStepper stepper(m);
    const double dt = 0.05;
    const std::size_t r = 20;
    for (const auto &sched : {ProtectionSchedule::haar_su2(4, r, 1), ProtectionSchedule::hadamard_det(4, r)}) {
        const Mat u = stepper.exact(dt).matrix();
        Mat acc = Mat::Identity(16, 16);
        for (std::size_t k = 1; k <= r; ++k) {
            const Mat c = sched.materialize(k, m.layout()).matrix();
            acc = c.adjoint() * u * c * acc;
        }
        EXPECT_LE(oracle::norm2(acc - stepper.exact(dt * r).matrix()), 1e-9);
    }
}

struct EquivCase {
    std::string name;
    HamiltonianModel model;
    ProtectionSchedule schedule;
};

TEST(Backends, DenseAndStatevecAgree) {
    const HamiltonianModel heis = build_random_heisenberg(4, 31);
    const HamiltonianModel mbl5 = build_mbl_heisenberg(5, 2.0, 32);
    const HamiltonianModel mbl6 = build_mbl_heisenberg(6, 1.0, 33);
    const HamiltonianModel sch2 = build_schwinger(2, 2, 0.6, 0.1);
    const HamiltonianModel sch4 = build_schwinger(2, 4, 0.8, 0.3);
    const std::size_t r = 6;
    const std::vector<EquivCase> cases = {
        {"heis-identity", heis, ProtectionSchedule::identity(r)},
        {"heis-haar", heis, ProtectionSchedule::haar_su2(4, r, 3)},
        {"heis-hadamard", heis, ProtectionSchedule::hadamard_det(4, r)},
        {"heis-ordering", heis, ProtectionSchedule::random_ordering(3, r, 4)},
        {"mbl5-u1", mbl5, ProtectionSchedule::u1_z(5, r, 5, ScheduleMode::independent)},
        {"mbl6-u1pow", mbl6, ProtectionSchedule::u1_z(6, r, 6, ScheduleMode::powers_of_c0)},
        {"sch2-z2l", sch2, ProtectionSchedule::gauge(sch2, r, SymmetryGroup::z2l_gauge, ScheduleMode::independent, 7)},
        {"sch4-u1", sch4, ProtectionSchedule::gauge(sch4, r, SymmetryGroup::u1_gauge, ScheduleMode::uniform_angles, 8)},
        {"sch4-raw", sch4, ProtectionSchedule::identity(r)},
    };
    for (const auto &c : cases) {
        for (Algorithm alg : {Algorithm::pf1, Algorithm::pf2, Algorithm::pf4, Algorithm::mpf}) {
            if (c.schedule.kind() == ScheduleKind::term_ordering && alg != Algorithm::pf1) {
                continue;
            }
            EvolutionPlan plan{alg, 0.07, r, c.schedule, Backend::dense, std::nullopt};
            const DenseRunResult dense = protected_run_dense(c.model, plan);
            const Vec psi0 = oracle::random_state(static_cast<Eigen::Index>(c.model.dim()), 99);
            plan.backend = Backend::statevec;
            const StatevecRunResult sv =
                protected_run_statevec(c.model, plan, StateVec(c.model.layout(), psi0));
            Vec ref = dense.final_operator.matrix() * psi0;
            ref /= ref.norm();
            const double fidelity = std::abs(ref.dot(sv.final_state.amplitudes()));
            EXPECT_NEAR(fidelity, 1.0, 1e-9) << c.name << " " << to_string(alg);
            EXPECT_LT((ref - sv.final_state.amplitudes()).cwiseAbs().maxCoeff(), 1e-9) << c.name << " " << to_string(alg);
            if (alg == Algorithm::mpf) {
                EXPECT_EQ(sv.mpf_norms.size(), r);
            }
        }
    }
}

TEST(Backends, StatevecRejectsBadInputs) {
    const HamiltonianModel m = build_random_heisenberg(3, 1);
    EvolutionPlan plan{Algorithm::pf1, 0.1, 2, ProtectionSchedule::identity(2), Backend::statevec, std::nullopt};
    StateVec unnorm(m.layout(), Vector::Ones(8), false);
    EXPECT_THROW(protected_run_statevec(m, plan, unnorm), DomainError);
    EXPECT_THROW(protected_run_statevec(m, plan, StateVec::basis(Layout::qubits(2), 0)), DomainError);
}

TEST(Backends, StatevecBlockCacheIsReused) {
    const HamiltonianModel m = build_mbl_heisenberg(4, 1.0, 1);
    StatevecStepper stepper(m);
    EvolutionPlan plan{Algorithm::pf1, 0.1, 50, ProtectionSchedule::identity(50), Backend::statevec, std::nullopt};
    protected_run_statevec(stepper, plan, StateVec::basis(m.layout(), 3));
    EXPECT_EQ(stepper.cached_blocks(), m.num_terms());
}

TEST(Leakage, BoundsAndExactEvolution) {
    const HamiltonianModel m = build_schwinger(3, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    // Arbitrary states: leakage in [0, 1].
    for (unsigned long s = 0; s < 10; ++s) {
        const double l = leakage(oracle::random_state(static_cast<Eigen::Index>(m.dim()), s), phys);
        EXPECT_GE(l, 0.0);
        EXPECT_LE(l, 1.0);
    }
    // A random physical state stays physical under exact evolution.
    Vec psi = Vec::Zero(static_cast<Eigen::Index>(m.dim()));
    const Vec rnd = oracle::random_state(static_cast<Eigen::Index>(phys.dim_phys()), 5);
    for (std::size_t i = 0; i < phys.dim_phys(); ++i) {
        psi(static_cast<Eigen::Index>(phys.basis_indices[i])) = rnd(static_cast<Eigen::Index>(i));
    }
    EXPECT_LE(leakage(psi, phys), 1e-15);
    const Operator u = exact_evolution(m, 0.5);
    for (int k = 0; k < 10; ++k) {
        psi = u.matrix() * psi;
        EXPECT_LE(leakage(psi, phys), 1e-10);
    }
}

TEST(Leakage, ResolvesTinyWeightIndependentOfNorm) {
    const HamiltonianModel m = build_schwinger(3, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    Vec psi = Vec::Zero(static_cast<Eigen::Index>(m.dim()));
    psi(static_cast<Eigen::Index>(phys.basis_indices[0])) = 1.0 + 1e-9;
    EXPECT_EQ(leakage(psi, phys), 0.0);
    std::size_t outside = 0;
    while (std::binary_search(phys.basis_indices.begin(), phys.basis_indices.end(), outside)) {
        ++outside;
    }
    psi(static_cast<Eigen::Index>(outside)) = 1e-9;
    const double expected = 1e-18 / (std::pow(1.0 + 1e-9, 2) + 1e-18);
    EXPECT_NEAR(leakage(psi, phys), expected, 1e-12 * expected);
}

TEST(Leakage, GroundStateHasNone) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    EXPECT_EQ(leakage(ground_state_physical(m).state, phys), 0.0);
}

TEST(Leakage, ZeroHoppingEvolutionNeverLeaks) {
    const HamiltonianModel m = build_schwinger(3, 2, 0.0, 0.4);
    const PhysicalSubspace phys = physical_projector(m);
    EvolutionPlan plan{Algorithm::pf1, 0.1, 20, ProtectionSchedule::identity(20), Backend::statevec, std::nullopt};
    const auto res = protected_run_statevec(m, plan, StateVec::basis(m.layout(), phys.basis_indices[1]), &phys);
    ASSERT_EQ(res.leakage.size(), 21U);
    for (double l : res.leakage) {
        EXPECT_EQ(l, 0.0);
    }
}

TEST(Noise, RotationProperties) {
    NoiseSpec spec{0.0, 3, 11};
    EXPECT_LT((noise_rotation(spec, 1) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    spec.eta = 0.2;
    for (std::size_t k = 1; k <= 9; ++k) {
        EXPECT_TRUE(Operator(noise_rotation(spec, k)).is_unitary(1e-12));
    }
    // Axis held within a window of lambda steps, redrawn across windows.
    EXPECT_EQ(noise_rotation(spec, 1), noise_rotation(spec, 3));
    EXPECT_NE(noise_rotation(spec, 3), noise_rotation(spec, 4));
    EXPECT_EQ(noise_rotation(spec, 4), noise_rotation(spec, 6));
    spec.lambda = 0;
    EXPECT_THROW(noise_rotation(spec, 1), DomainError);
    spec.lambda = 1;
    EXPECT_THROW(noise_rotation(spec, 0), DomainError);
    spec.per_qubit_axes = true;
    EXPECT_NE(noise_rotation(spec, 1, 0), noise_rotation(spec, 1, 1));
}

TEST(Noise, PreservesNormAndBreaksGaussLaw) {
    const HamiltonianModel m = build_schwinger(4, 4, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    const StateVec gs = ground_state_physical(m).state;
    const NoiseSpec spec{0.01, 1, 3};
    const StateVec noisy = apply_noise(gs, m, spec, 1);
    EXPECT_NEAR(noisy.norm(), 1.0, 1e-12);
    EXPECT_GT(leakage(noisy, phys), 0.0);
    const NoiseSpec none{0.0, 1, 3};
    EXPECT_EQ(apply_noise(gs, m, none, 1).amplitudes(), gs.amplitudes());
}

TEST(Noise, CoherentAccumulationGrowsQuadratically) {
    // Fixed axis (lambda larger than the run): leakage ~ (r eta)^2 for small angles.
    const HamiltonianModel m = build_schwinger(3, 2, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    const StateVec gs = ground_state_physical(m).state;
    const NoiseSpec spec{1e-3, 1000, 8};
    Vector psi = gs.amplitudes();
    std::vector<double> leak;
    for (std::size_t k = 1; k <= 10; ++k) {
        apply_noise(psi, m, spec, k);
        leak.push_back(leakage(psi, phys));
    }
    EXPECT_NEAR(leak[9] / leak[0], 100.0, 5.0);
    EXPECT_NEAR(leak[4] / leak[0], 25.0, 1.25);
}

TEST(Noise, StatevecMatchesDenseOracle) {
    const HamiltonianModel m = build_schwinger(2, 2, 0.6, 0.1);
    const std::size_t r = 5;
    const auto sched = ProtectionSchedule::gauge(m, r, SymmetryGroup::u1_gauge, ScheduleMode::independent, 3);
    for (auto placement : {NoisePlacement::inside_protection, NoisePlacement::after_step}) {
        NoiseSpec spec{0.05, 2, 17};
        spec.placement = placement;
        EvolutionPlan plan{Algorithm::pf2, 0.1, r, sched, Backend::statevec, spec};
        const Vec psi0 = oracle::random_state(16, 4);
        const auto res = protected_run_statevec(m, plan, StateVec(m.layout(), psi0));
        const Mat s = pf2_step(m, 0.1).matrix();
        Vec ref = psi0;
        for (std::size_t k = 1; k <= r; ++k) {
            const Mat c = sched.materialize(k, m.layout()).matrix();
            const Mat w = noise_rotation(spec, k);
            // Factors: site, link (4 levels), site.
            const Mat noise = oracle::kron(oracle::kron(w, Mat::Identity(4, 4)), w);
            if (placement == NoisePlacement::inside_protection) {
                ref = c.adjoint() * noise * s * c * ref;
            } else {
                ref = noise * c.adjoint() * s * c * ref;
            }
        }
        EXPECT_LT((ref - res.final_state.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Determinism, RerunsAreBitwiseIdentical) {
    const HamiltonianModel m = build_schwinger(3, 2, 0.6, 0.1);
    const PhysicalSubspace phys = physical_projector(m);
    const auto sched = ProtectionSchedule::gauge(m, 30, SymmetryGroup::u1_gauge, ScheduleMode::independent, 5);
    EvolutionPlan plan{Algorithm::pf4, 0.01, 30, sched, Backend::statevec, NoiseSpec{0.01, 2, 9}};
    const StateVec gs = ground_state_physical(m).state;
    const auto a = protected_run_statevec(m, plan, gs, &phys);
    const auto b = protected_run_statevec(m, plan, gs, &phys);
    EXPECT_EQ(a.final_state.amplitudes(), b.final_state.amplitudes());
    EXPECT_EQ(a.leakage, b.leakage);
}

}  // namespace
}  // namespace symprot
