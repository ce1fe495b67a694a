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
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "symprot/evolve.hpp"

namespace symprot {

namespace {

std::uint64_t time_key(double t) {
    std::uint64_t bits;
    std::memcpy(&bits, &t, sizeof bits);
    return bits;
}

}  // namespace

StatevecStepper::StatevecStepper(const HamiltonianModel &model)
    : model_(std::make_shared<const HamiltonianModel>(model)) {}

const StatevecStepper::CompiledTerm &StatevecStepper::compiled(std::size_t term, double time) {
    const auto key = std::make_pair(term, time_key(time));
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    const Term &t = model_->terms().at(term);
    CompiledTerm ct;
    for (const LocalPiece &piece : t.pieces) {
        Gate g;
        g.qubits = piece.qubits;
        const auto d = piece.op.rows();
        const double theta = time * piece.coefficient;
        if (piece.involutory && piece.monomial) {
            // exp(-i theta T) = cos(theta) I - i sin(theta) T for T^2 = I.
            g.sparse = true;
            const double c = std::cos(theta);
            const cplx ms(0.0, -std::sin(theta));
            for (Eigen::Index r = 0; r < d; ++r) {
                Eigen::Index col = 0;
                for (Eigen::Index cc = 0; cc < d; ++cc) {
                    if (std::abs(piece.op(r, cc)) > 1e-14) {
                        col = cc;
                    }
                }
                if (col == r) {
                    g.col0.push_back(static_cast<std::uint32_t>(r));
                    g.val0.push_back(c + ms * piece.op(r, r));
                    g.col1.push_back(static_cast<std::uint32_t>(r));
                    g.val1.push_back(0.0);
                } else {
                    g.col0.push_back(static_cast<std::uint32_t>(r));
                    g.val0.push_back(c);
                    g.col1.push_back(static_cast<std::uint32_t>(col));
                    g.val1.push_back(ms * piece.op(r, col));
                }
            }
        } else {
            const Operator h(Layout({static_cast<std::size_t>(d)}), piece.coefficient * piece.op);
            g.dense = HermitianEigen(h).exp_minus_i(time).matrix();
            g.data.resize(static_cast<std::size_t>(d * d));
            for (Eigen::Index r = 0; r < d; ++r) {
                for (Eigen::Index c = 0; c < d; ++c) {
                    g.data[static_cast<std::size_t>(r * d + c)] = g.dense(r, c);
                }
            }
        }
        ct.gates.push_back(std::move(g));
    }
    if (!t.diagonal.empty()) {
        ct.phases.resize(t.diagonal.size());
        for (std::size_t b = 0; b < t.diagonal.size(); ++b) {
            ct.phases[b] = std::polar(1.0, -time * t.diagonal[b]);
        }
    }
    return cache_.emplace(key, std::move(ct)).first->second;
}

void StatevecStepper::run_gate(Vector &psi, const Gate &g) {
    const auto n = static_cast<std::size_t>(psi.size());
    const auto k = static_cast<unsigned>(g.qubits.size());
    if (g.sparse) {
        const kernels::Sparse2 rows{g.col0.data(), g.col1.data(), g.val0.data(), g.val1.data()};
        kernels::apply_sparse2_block(psi.data(), n, g.qubits.data(), k, rows);
    } else {
        kernels::apply_dense_block(psi.data(), n, g.qubits.data(), k, g.data.data());
    }
}

void StatevecStepper::apply_term(Vector &psi, std::size_t term, double time) {
    require(static_cast<std::size_t>(psi.size()) == model_->dim(), "state length does not match the model");
    const CompiledTerm &ct = compiled(term, time);
    if (!ct.phases.empty()) {
        kernels::mul_diagonal(psi.data(), ct.phases.data(), ct.phases.size());
    }
    for (const Gate &g : ct.gates) {
        run_gate(psi, g);
    }
}

void StatevecStepper::apply_slots(Vector &psi, const std::vector<Slot> &slots) {
    for (const Slot &s : slots) {
        apply_term(psi, s.term, s.time);
    }
}

double StatevecStepper::apply_step(Vector &psi, Algorithm algorithm, double dt,
                                   const std::vector<std::size_t> &order) {
    if (algorithm != Algorithm::mpf) {
        apply_slots(psi, product_formula_slots(algorithm, order, dt));
        return 1.0;
    }
    scratch_a_ = psi;
    const std::vector<Slot> quarter = pf2_slots(order, dt / 4);
    for (int i = 0; i < 4; ++i) {
        apply_slots(scratch_a_, quarter);
    }
    apply_slots(psi, pf2_slots(order, dt));
    const auto n = static_cast<std::size_t>(psi.size());
    kernels::axpby(cplx(16.0 / 15.0), scratch_a_.data(), cplx(-1.0 / 15.0), psi.data(), psi.data(), n);
    const double norm = std::sqrt(kernels::squared_norm(psi.data(), n));
    if (norm < 1e-6) {
        throw NumericalError("multi-product combination cancelled to a vanishing norm");
    }
    psi /= norm;
    return norm;
}

void StatevecStepper::apply_protection(Vector &psi, const ProtectionSchedule &schedule, const StepProtection &p,
                                       bool adjoint) const {
    const auto n = static_cast<std::size_t>(psi.size());
    switch (p.form) {
        case StepProtection::Form::identity:
        case StepProtection::Form::permutation: return;
        case StepProtection::Form::gauge_phases: {
            std::vector<cplx> phases = schedule.gauge_phases(p.gauge_angles);
            if (adjoint) {
                for (auto &v : phases) {
                    v = std::conj(v);
                }
            }
            kernels::mul_diagonal(psi.data(), phases.data(), n);
            return;
        }
        case StepProtection::Form::global_product: {
            for (FactorRole role : model_->roles()) {
                require(role == FactorRole::site_qubit, "global-product protection needs an all-qubit register");
            }
            const Matrix w = adjoint ? Matrix(p.single_qubit.adjoint()) : p.single_qubit;
            const cplx data[4] = {w(0, 0), w(0, 1), w(1, 0), w(1, 1)};
            for (unsigned q = 0; q < model_->num_bits(); ++q) {
                kernels::apply_dense_block(psi.data(), n, &q, 1, data);
            }
            return;
        }
    }
}

// Sums the unphysical weight directly; 1 - <physical weight> would only resolve the norm drift.
double leakage(const Vector &amplitudes, const PhysicalSubspace &phys) {
    double outside = 0.0, total = 0.0;
    auto next = phys.basis_indices.begin();
    for (Eigen::Index b = 0; b < amplitudes.size(); ++b) {
        const double p = std::norm(amplitudes(b));
        total += p;
        if (next != phys.basis_indices.end() && *next == static_cast<std::size_t>(b)) {
            ++next;
        } else {
            outside += p;
        }
    }
    return total > 0.0 ? outside / total : 0.0;
}

double leakage(const StateVec &state, const PhysicalSubspace &phys) {
    require(state.dim() == phys.projector.dim(), "state and subspace dimensions differ");
    return leakage(state.amplitudes(), phys);
}

StatevecRunResult protected_run_statevec(StatevecStepper &stepper, const EvolutionPlan &plan,
                                         const StateVec &initial, const PhysicalSubspace *phys) {
    const HamiltonianModel &model = stepper.model();
    require(initial.tagged_normalized(), "initial state must be normalized");
    require(initial.dim() == model.dim(), "initial state dimension does not match the model");
    require(plan.dt > 0.0, "plan dt must be positive");
    const ProtectionSchedule &sched = plan.schedule;
    require(sched.steps() == plan.r, "schedule step count must equal the plan step count");
    const bool reorder = sched.kind() == ScheduleKind::term_ordering;
    require(!reorder || plan.algorithm == Algorithm::pf1, "random term ordering is defined for PF1 only");
    if (plan.noise) {
        require(plan.noise->eta >= 0.0 && plan.noise->lambda >= 1, "noise needs eta >= 0 and lambda >= 1");
    }

    StatevecRunResult out;
    Vector psi = initial.amplitudes();
    if (phys) {
        out.leakage.reserve(plan.r + 1);
        out.leakage.push_back(leakage(psi, *phys));
    }
    std::vector<std::size_t> order(model.num_terms());
    std::iota(order.begin(), order.end(), 0);
    const auto n = static_cast<std::size_t>(psi.size());
    std::vector<cplx> phases;
    for (std::size_t k = 1; k <= plan.r; ++k) {
        const StepProtection p = sched.step(k);
        if (reorder) {
            order = p.permutation;
        }
        const bool diagonal = p.form == StepProtection::Form::gauge_phases;
        if (diagonal) {
            phases = sched.gauge_phases(p.gauge_angles);
            kernels::mul_diagonal(psi.data(), phases.data(), n);
        } else {
            stepper.apply_protection(psi, sched, p, false);
        }
        const double norm = stepper.apply_step(psi, plan.algorithm, plan.dt, order);
        if (plan.algorithm == Algorithm::mpf) {
            out.mpf_norms.push_back(norm);
        }
        if (plan.noise && plan.noise->placement == NoisePlacement::inside_protection) {
            apply_noise(psi, model, *plan.noise, k);
        }
        if (diagonal) {
            for (auto &v : phases) {
                v = std::conj(v);
            }
            kernels::mul_diagonal(psi.data(), phases.data(), n);
        } else {
            stepper.apply_protection(psi, sched, p, true);
        }
        if (plan.noise && plan.noise->placement == NoisePlacement::after_step) {
            apply_noise(psi, model, *plan.noise, k);
        }
        if (phys) {
            out.leakage.push_back(leakage(psi, *phys));
        }
    }
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        psi /= norm;
    }
    out.final_state = StateVec(model.layout(), std::move(psi));
    return out;
}

StatevecRunResult protected_run_statevec(const HamiltonianModel &model, const EvolutionPlan &plan,
                                         const StateVec &initial, const PhysicalSubspace *phys) {
    StatevecStepper stepper(model);
    return protected_run_statevec(stepper, plan, initial, phys);
}

}  // namespace symprot
