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

#include "symprot/bounds.hpp"

namespace symprot {

namespace {

void check_terms(const std::vector<Operator> &terms) {
    require(terms.size() <= kMaxBoundTerms, "commutator sums support at most 16 terms");
    for (std::size_t i = 1; i < terms.size(); ++i) {
        require(terms[i].layout() == terms[0].layout(), "terms must share one layout");
    }
}

Matrix comm(const Matrix &a, const Matrix &b) {
    return a * b - b * a;
}

Matrix v0_matrix(const std::vector<Operator> &terms, const std::vector<std::size_t> &order) {
    const auto d = static_cast<Eigen::Index>(terms[0].dim());
    Matrix out = Matrix::Zero(d, d);
    for (std::size_t mu = 0; mu < order.size(); ++mu) {
        for (std::size_t nu = mu + 1; nu < order.size(); ++nu) {
            out += comm(terms[order[nu]].matrix(), terms[order[mu]].matrix());
        }
    }
    return out;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    return order;
}

}  // namespace

CommutatorSums commutator_sums(const std::vector<Operator> &terms) {
    CommutatorSums s;
    if (terms.size() < 2) {
        return s;
    }
    check_terms(terms);
    Matrix total = Matrix::Zero(static_cast<Eigen::Index>(terms[0].dim()), static_cast<Eigen::Index>(terms[0].dim()));
    for (const auto &t : terms) {
        total += t.matrix();
    }
    const std::size_t L = terms.size();
    for (std::size_t mu = 0; mu < L; ++mu) {
        for (std::size_t nu = mu + 1; nu < L; ++nu) {
            const Matrix c = comm(terms[nu].matrix(), terms[mu].matrix());
            s.alpha += spectral_norm(c);
            for (std::size_t nup = nu; nup < L; ++nup) {
                s.beta += spectral_norm(Matrix(comm(terms[nup].matrix(), c)));
            }
            s.gamma += spectral_norm(Matrix(comm(total, c)));
        }
    }
    return s;
}

CommutatorSums commutator_sums(const HamiltonianModel &model) {
    return commutator_sums(model.dense_terms());
}

Operator v0(const std::vector<Operator> &terms) {
    require(!terms.empty(), "v0 needs at least one term");
    check_terms(terms);
    return Operator(terms[0].layout(), v0_matrix(terms, identity_order(terms.size())));
}

Operator v0(const HamiltonianModel &model) {
    return v0(model.dense_terms());
}

AveragedV0 vbar0_powers(const Operator &v0_op, const Operator &c0, std::size_t r) {
    require(r >= 1, "averaging needs r >= 1");
    require(v0_op.dim() == c0.dim(), "v0 and C0 dimensions differ");
    const Matrix &c = c0.matrix();
    Matrix x = v0_op.matrix();
    Matrix sum = Matrix::Zero(x.rows(), x.cols());
    for (std::size_t k = 1; k <= r; ++k) {
        x = c.adjoint() * x * c;
        sum += x;
    }
    sum /= static_cast<double>(r);
    AveragedV0 out;
    out.norm = spectral_norm(sum);
    out.op = Operator(v0_op.layout(), std::move(sum));
    return out;
}

AveragedV0 vbar0(const DenseStepper &stepper, const ProtectionSchedule &schedule, Frame frame, double dt) {
    const std::size_t r = schedule.steps();
    require(r >= 1, "averaging needs r >= 1");
    require(frame == Frame::none || dt > 0.0, "the heisenberg frame needs dt > 0");
    const std::vector<Operator> &terms = stepper.terms();
    require(!terms.empty(), "model has no terms");
    check_terms(terms);
    const Layout &layout = stepper.layout();
    const std::size_t d = layout.dim();
    const auto D = static_cast<Eigen::Index>(d);
    const bool reorder = schedule.kind() == ScheduleKind::term_ordering;
    const Matrix base_v0 = v0_matrix(terms, identity_order(terms.size()));

    Matrix u_step;
    Matrix u_k = Matrix::Identity(D, D);
    if (frame == Frame::heisenberg) {
        u_step = stepper.exact(dt).matrix();
    }
    Matrix sum = Matrix::Zero(D, D);
    for (std::size_t k = 1; k <= r; ++k) {
        Matrix x = reorder ? v0_matrix(terms, schedule.ordering(k, terms.size())) : base_v0;
        if (frame == Frame::heisenberg) {
            u_k = u_step * u_k;
            x = u_k.adjoint() * x * u_k;
        }
        if (schedule.conjugates()) {
            if (auto diag = schedule.diagonal(k, d)) {
                const Eigen::Map<const Vector> c(diag->data(), D);
                x = c.conjugate().asDiagonal() * x * c.asDiagonal();
            } else {
                const Matrix c = schedule.materialize(k, layout).matrix();
                x = c.adjoint() * x * c;
            }
        }
        sum += x;
    }
    sum /= static_cast<double>(r);
    AveragedV0 out;
    out.norm = spectral_norm(sum);
    out.op = Operator(layout, std::move(sum));
    return out;
}

AveragedV0 vbar0(const HamiltonianModel &model, const ProtectionSchedule &schedule, Frame frame, double dt) {
    require(model.dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    return vbar0(DenseStepper(model), schedule, frame, dt);
}

}  // namespace symprot
