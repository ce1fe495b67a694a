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
#include <numeric>

#include "symprot/evolve.hpp"

namespace symprot {

const char *to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::pf1: return "pf1";
        case Algorithm::pf2: return "pf2";
        case Algorithm::pf4: return "pf4";
        case Algorithm::mpf: return "mpf";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string &name) {
    if (name == "pf1") return Algorithm::pf1;
    if (name == "pf2") return Algorithm::pf2;
    if (name == "pf4") return Algorithm::pf4;
    if (name == "mpf") return Algorithm::mpf;
    throw DomainError("unknown algorithm '" + name + "' (expected pf1, pf2, pf4 or mpf)");
}

double suzuki_kappa4() {
    // Third-order cancellation: 4 k^3 + (1 - 4k)^3 = 0.
    return 1.0 / (4.0 - std::cbrt(4.0));
}

namespace {

void push_merged(std::vector<Slot> &slots, Slot s) {
    if (!slots.empty() && slots.back().term == s.term) {
        slots.back().time += s.time;
    } else {
        slots.push_back(s);
    }
}

void append_pf2(std::vector<Slot> &slots, const std::vector<std::size_t> &order, double dt) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        push_merged(slots, {*it, dt / 2});
    }
    for (std::size_t t : order) {
        push_merged(slots, {t, dt / 2});
    }
}

std::vector<std::size_t> default_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

std::vector<Slot> pf2_slots(const std::vector<std::size_t> &order, double dt) {
    std::vector<Slot> slots;
    append_pf2(slots, order, dt);
    return slots;
}

std::vector<Slot> product_formula_slots(Algorithm algorithm, const std::vector<std::size_t> &order, double dt) {
    std::vector<Slot> slots;
    switch (algorithm) {
        case Algorithm::pf1:
            for (std::size_t t : order) {
                push_merged(slots, {t, dt});
            }
            break;
        case Algorithm::pf2: append_pf2(slots, order, dt); break;
        case Algorithm::pf4: {
            const double k4 = suzuki_kappa4();
            const double sub[5] = {k4 * dt, k4 * dt, (1.0 - 4.0 * k4) * dt, k4 * dt, k4 * dt};
            for (double s : sub) {
                append_pf2(slots, order, s);
            }
            break;
        }
        case Algorithm::mpf: throw DomainError("the multi-product formula is not a single product of exponentials");
    }
    return slots;
}

DenseStepper::DenseStepper(const HamiltonianModel &model)
    : layout_(model.layout()), terms_(model.dense_terms()), total_(Operator::zero(model.layout())) {
    for (const auto &t : terms_) {
        total_ = total_ + t;
        eig_.emplace_back(t);
    }
    total_eig_.emplace(total_);
}

Operator DenseStepper::term_exponential(std::size_t term, double time) const {
    return eig_.at(term).exp_minus_i(time);
}

Operator DenseStepper::product(const std::vector<Slot> &slots) const {
    Matrix acc = Matrix::Identity(static_cast<Eigen::Index>(layout_.dim()), static_cast<Eigen::Index>(layout_.dim()));
    for (const Slot &s : slots) {
        acc = term_exponential(s.term, s.time).matrix() * acc;
    }
    return Operator(layout_, std::move(acc));
}

Operator DenseStepper::step(Algorithm algorithm, double dt, const std::vector<std::size_t> &order_in) const {
    const std::vector<std::size_t> order = order_in.empty() ? default_order(terms_.size()) : order_in;
    if (algorithm != Algorithm::mpf) {
        return product(product_formula_slots(algorithm, order, dt));
    }
    const Operator quarter = product(pf2_slots(order, dt / 4));
    const Matrix q2 = quarter.matrix() * quarter.matrix();
    const Operator full = product(pf2_slots(order, dt));
    return Operator(layout_, (16.0 / 15.0) * (q2 * q2) - (1.0 / 15.0) * full.matrix());
}

Operator DenseStepper::exact(double t) const {
    return total_eig_->exp_minus_i(t);
}

Operator pf1_step(const HamiltonianModel &model, double dt) {
    return DenseStepper(model).step(Algorithm::pf1, dt);
}

Operator pf2_step(const HamiltonianModel &model, double dt) {
    return DenseStepper(model).step(Algorithm::pf2, dt);
}

Operator pf4_step(const HamiltonianModel &model, double dt) {
    return DenseStepper(model).step(Algorithm::pf4, dt);
}

Operator mpf_step(const HamiltonianModel &model, double dt) {
    return DenseStepper(model).step(Algorithm::mpf, dt);
}

Operator exact_evolution(const HamiltonianModel &model, double t) {
    return expm_hermitian(model.dense_total(), t);
}

Operator effective_hamiltonian(const Operator &step, double dt) {
    require(dt != 0.0, "effective Hamiltonian needs dt != 0");
    const Operator log = principal_log_unitary(step);
    const Matrix h = cplx(0.0, 1.0 / dt) * log.matrix();
    return Operator(step.layout(), 0.5 * (h + h.adjoint()));
}

namespace {

Matrix matrix_power(const Matrix &s, std::size_t r) {
    Matrix result = Matrix::Identity(s.rows(), s.cols());
    Matrix base = s;
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

}  // namespace

DenseRunResult protected_run_dense(const DenseStepper &stepper, const EvolutionPlan &plan) {
    require(plan.dt > 0.0, "plan dt must be positive");
    require(plan.r >= 1, "plan needs r >= 1");
    require(!plan.noise.has_value(), "noise injection requires the state-vector backend");
    const ProtectionSchedule &sched = plan.schedule;
    require(sched.steps() == plan.r, "schedule step count must equal the plan step count");
    const bool reorder = sched.kind() == ScheduleKind::term_ordering;
    require(!reorder || plan.algorithm == Algorithm::pf1, "random term ordering is defined for PF1 only");

    const std::size_t d = stepper.layout().dim();
    const auto D = static_cast<Eigen::Index>(d);
    Matrix acc;
    if (sched.kind() == ScheduleKind::identity) {
        acc = matrix_power(stepper.step(plan.algorithm, plan.dt).matrix(), plan.r);
    } else {
        acc = Matrix::Identity(D, D);
        Operator s;
        if (!reorder) {
            s = stepper.step(plan.algorithm, plan.dt);
        }
        for (std::size_t k = 1; k <= plan.r; ++k) {
            if (reorder) {
                acc = stepper.step(Algorithm::pf1, plan.dt, sched.ordering(k, stepper.num_terms())).matrix() * acc;
                continue;
            }
            Matrix m;
            if (auto diag = sched.diagonal(k, d)) {
                const Eigen::Map<const Vector> c(diag->data(), D);
                m = c.conjugate().asDiagonal() * s.matrix() * c.asDiagonal();
            } else {
                const Matrix c = sched.materialize(k, stepper.layout()).matrix();
                m = c.adjoint() * s.matrix() * c;
            }
            acc = m * acc;
        }
    }
    DenseRunResult out;
    out.exact = stepper.exact(static_cast<double>(plan.r) * plan.dt);
    out.error = spectral_norm(Matrix(acc - out.exact.matrix()));
    out.final_operator = Operator(stepper.layout(), std::move(acc));
    return out;
}

DenseRunResult protected_run_dense(const HamiltonianModel &model, const EvolutionPlan &plan) {
    require(model.dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    return protected_run_dense(DenseStepper(model), plan);
}

}  // namespace symprot
