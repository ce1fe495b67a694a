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

Precondition make_pre(std::string name, double lhs, double rhs) {
    return Precondition{std::move(name), lhs, rhs, lhs <= rhs};
}

bool all_hold(const std::vector<Precondition> &pre) {
    for (const auto &p : pre) {
        if (!p.holds) {
            return false;
        }
    }
    return true;
}

void check_inputs(double t, std::size_t r) {
    require(t > 0.0 && std::isfinite(t), "bound needs a finite t > 0");
    require(r >= 1, "bound needs r >= 1");
}

}  // namespace

const char *to_string(LogBase base) {
    return base == LogBase::binary ? "log2" : "ln";
}

double log_r(std::size_t r, LogBase base) {
    require(r >= 1, "log r needs r >= 1");
    const auto x = static_cast<double>(r);
    return base == LogBase::binary ? std::log2(x) : std::log(x);
}

const char *to_string(BoundKind kind) {
    return kind == BoundKind::theorem1 ? "theorem1" : "appendix_c";
}

bool BoundReport::preconditions_hold() const {
    return all_hold(preconditions);
}

double BoundReport::recompute() const {
    const auto rr = static_cast<double>(r);
    if (kind == BoundKind::theorem1) {
        return vbar0_norm * t * t / (2.0 * rr) + chi * t * t * t / (rr * rr) +
               kappa * t * t * t * log_r(r, log_base) / (rr * rr);
    }
    const double q = v0_norm / 2.0 + lambda_c * t / rr;
    return vbar0_norm * t * t / (2.0 * rr) + lambda_c * t * t * t / (rr * rr) + 2.0 * q * q * std::pow(t, 4) / (rr * rr);
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["log_base"] = to_string(log_base);
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["chi"] = chi;
    j["kappa"] = kappa;
    j["lambda_c"] = lambda_c;
    j["h_norm"] = h_norm;
    j["xi"] = xi;
    j["m"] = m;
    j["v0_norm"] = v0_norm;
    j["vbar0_norm"] = vbar0_norm;
    j["step_error"] = step_error;
    j["t"] = t;
    j["r"] = r;
    j["dt"] = dt;
    j["bound_value"] = bound_value;
    j["defined"] = defined;
    auto &pre = j["preconditions"];
    pre = nlohmann::json::object();
    for (const auto &p : preconditions) {
        pre[p.name] = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"holds", p.holds}};
    }
    j["measured_error"] = measured_error ? nlohmann::json(*measured_error) : nlohmann::json();
    return j;
}

std::vector<Precondition> lemma1_preconditions(const CommutatorSums &sums, double h_norm, double dt) {
    return {
        make_pre("beta_dt_le_alpha", sums.beta * dt, sums.alpha),
        make_pre("two_alpha_dt_le_h_norm", 2.0 * sums.alpha * dt, h_norm),
        make_pre("eight_dt_h_norm_le_one", 8.0 * dt * h_norm, 1.0),
    };
}

double measured_error_powers(const DenseStepper &stepper, const Operator &c0, double dt, std::size_t r) {
    require(c0.dim() == stepper.layout().dim(), "C0 dimension does not match the model");
    const Matrix s = stepper.step(Algorithm::pf1, dt).matrix();
    const Matrix &c = c0.matrix();
    const auto D = static_cast<Eigen::Index>(c0.dim());
    Matrix ck = Matrix::Identity(D, D);
    Matrix acc = Matrix::Identity(D, D);
    for (std::size_t k = 1; k <= r; ++k) {
        ck = c * ck;
        acc = ck.adjoint() * s * ck * acc;
    }
    return spectral_norm(Matrix(acc - stepper.exact(static_cast<double>(r) * dt).matrix()));
}

BoundReport theorem1_bound(const HamiltonianModel &model, const Operator &c0, double t, std::size_t r,
                           const BoundOptions &options) {
    check_inputs(t, r);
    require(model.dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    require(c0.dim() == model.dim(), "C0 dimension does not match the model");
    require(c0.is_unitary(1e-9), "C0 must be unitary");
    const DenseStepper stepper(model);

    BoundReport rep;
    rep.kind = BoundKind::theorem1;
    rep.log_base = options.log_base;
    rep.t = t;
    rep.r = r;
    rep.dt = t / static_cast<double>(r);
    const CommutatorSums sums = commutator_sums(stepper.terms());
    rep.alpha = sums.alpha;
    rep.beta = sums.beta;
    rep.gamma = sums.gamma;
    rep.h_norm = spectral_norm(stepper.total());
    const Operator v = v0(stepper.terms());
    rep.v0_norm = spectral_norm(v);
    rep.vbar0_norm = vbar0_powers(v, c0, r).norm;
    rep.chi = rep.beta + 32.0 * rep.alpha * rep.h_norm;
    rep.lambda_c = 5.0 / 6.0 * (rep.gamma + rep.beta);

    const KickSpectrum spec = kick_spectrum(c0);
    rep.m = spec.m;
    if (spec.m >= 2 && spec.xi) {
        rep.xi = *spec.xi;
        rep.kappa = 48.0 * rep.xi * std::sqrt(static_cast<double>(rep.m)) * rep.alpha * rep.h_norm;
    } else {
        rep.defined = false;
        rep.xi = kNaN;
        rep.kappa = kNaN;
    }
    rep.preconditions = lemma1_preconditions(sums, rep.h_norm, rep.dt);
    rep.bound_value = rep.recompute();
    if (options.measure) {
        rep.measured_error = measured_error_powers(stepper, c0, rep.dt, r);
    }
    return rep;
}

BoundReport theorem1_bound(const HamiltonianModel &model, const ProtectionSchedule &schedule, double t,
                           std::size_t r, const BoundOptions &options) {
    require(schedule.is_powers_of_base(), "the main theorem needs a powers-of-C0 schedule");
    return theorem1_bound(model, schedule.base_unitary(model.layout()), t, r, options);
}

BoundReport appendixC_bound(const HamiltonianModel &model, const ProtectionSchedule &schedule_in, double t,
                            std::size_t r, const BoundOptions &options) {
    check_inputs(t, r);
    require(model.dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    require(schedule_in.kind() != ScheduleKind::term_ordering,
            "the general bound covers conjugation schedules, not term orderings");
    const ProtectionSchedule schedule = schedule_in.steps() == r ? schedule_in : schedule_in.with_steps(r);
    const DenseStepper stepper(model);

    BoundReport rep;
    rep.kind = BoundKind::appendix_c;
    rep.log_base = options.log_base;
    rep.t = t;
    rep.r = r;
    rep.dt = t / static_cast<double>(r);
    const CommutatorSums sums = commutator_sums(stepper.terms());
    rep.alpha = sums.alpha;
    rep.beta = sums.beta;
    rep.gamma = sums.gamma;
    rep.h_norm = spectral_norm(stepper.total());
    rep.v0_norm = spectral_norm(v0(stepper.terms()));
    rep.vbar0_norm = vbar0(stepper, schedule, Frame::heisenberg, rep.dt).norm;
    rep.chi = rep.beta + 32.0 * rep.alpha * rep.h_norm;
    rep.lambda_c = 5.0 / 6.0 * (rep.gamma + rep.beta);
    rep.kappa = kNaN;
    rep.xi = kNaN;
    rep.m = 0;
    rep.step_error =
        spectral_norm(Matrix(stepper.exact(rep.dt).matrix() - stepper.step(Algorithm::pf1, rep.dt).matrix()));
    rep.preconditions = {
        make_pre("beta_dt_le_two_alpha", rep.beta * rep.dt, 2.0 * rep.alpha),
        make_pre("alpha_sq_dt_le_gamma_plus_beta", rep.alpha * rep.alpha * rep.dt, rep.gamma + rep.beta),
        make_pre("r_step_error_le_half", static_cast<double>(r) * rep.step_error, 0.5),
    };
    rep.bound_value = rep.recompute();
    if (options.measure) {
        EvolutionPlan plan;
        plan.algorithm = Algorithm::pf1;
        plan.dt = rep.dt;
        plan.r = r;
        plan.schedule = schedule;
        rep.measured_error = protected_run_dense(stepper, plan).error;
    }
    return rep;
}

bool Lemma1Check::preconditions_hold() const {
    return all_hold(preconditions);
}

Lemma1Check lemma1_check(const HamiltonianModel &model, double dt) {
    require(dt > 0.0, "lemma check needs dt > 0");
    require(model.dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    const DenseStepper stepper(model);
    const CommutatorSums sums = commutator_sums(stepper.terms());
    const double h_norm = spectral_norm(stepper.total());
    Lemma1Check out;
    out.preconditions = lemma1_preconditions(sums, h_norm, dt);
    const Operator h_eff = effective_hamiltonian(stepper.step(Algorithm::pf1, dt), dt);
    const Operator v = v0(stepper.terms());
    const Matrix resid = h_eff.matrix() - stepper.total().matrix() + cplx(0.0, 0.5 * dt) * v.matrix();
    out.residual = spectral_norm(resid);
    out.bound = (sums.beta + 32.0 * sums.alpha * h_norm) * dt * dt;
    return out;
}

}  // namespace symprot
