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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symprot/evolve.hpp"
#include "symprot/linalg.hpp"
#include "symprot/models.hpp"
#include "symprot/symmetry.hpp"

namespace symprot {

/// Largest term count accepted by commutator_sums (the triple sum is cubic in L).
inline constexpr std::size_t kMaxBoundTerms = 16;

struct CommutatorSums {
    double alpha = 0.0;  // sum_{mu<nu} ||[H_nu, H_mu]||
    double beta = 0.0;   // sum_{mu<nu} sum_{nu'>=nu} ||[H_nu', [H_nu, H_mu]]||
    double gamma = 0.0;  // sum_{mu<nu} ||[H, [H_nu, H_mu]]||
};

CommutatorSums commutator_sums(const std::vector<Operator> &terms);
CommutatorSums commutator_sums(const HamiltonianModel &model);

/// v0 = sum_{mu<nu} [H_nu, H_mu]  (anti-Hermitian).
Operator v0(const std::vector<Operator> &terms);
Operator v0(const HamiltonianModel &model);

enum class Frame { none, heisenberg };

struct AveragedV0 {
    Operator op;
    double norm = 0.0;
};

/// (1/r) sum_k C_k^dag v0 C_k, or with frame = heisenberg
/// (1/r) sum_k C_k^dag U_{k dt}^dag v0 U_{k dt} C_k.  dt is used only by the heisenberg frame.
AveragedV0 vbar0(const DenseStepper &stepper, const ProtectionSchedule &schedule, Frame frame, double dt = 0.0);
AveragedV0 vbar0(const HamiltonianModel &model, const ProtectionSchedule &schedule, Frame frame, double dt = 0.0);
/// Plain average over C_k = c0^k, k = 1..r.
AveragedV0 vbar0_powers(const Operator &v0_op, const Operator &c0, std::size_t r);

/// Base of the "log r" factor in the Zeno-type terms.
enum class LogBase { binary, natural };
const char *to_string(LogBase base);
double log_r(std::size_t r, LogBase base);

enum class BoundKind { theorem1, appendix_c };
const char *to_string(BoundKind kind);

struct Precondition {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct BoundReport {
    BoundKind kind = BoundKind::theorem1;
    LogBase log_base = LogBase::binary;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double chi = 0.0;       // beta + 32 alpha ||H||
    double kappa = 0.0;     // 48 xi sqrt(m) alpha ||H||; NaN when undefined
    double lambda_c = 0.0;  // (5/6)(gamma + beta)
    double h_norm = 0.0;
    double xi = 0.0;  // NaN when m == 1
    std::size_t m = 0;
    double v0_norm = 0.0;
    double vbar0_norm = 0.0;
    double step_error = 0.0;  // ||U_dt - S_dt||, appendix_c reports only
    double t = 0.0;
    std::size_t r = 0;
    double dt = 0.0;
    double bound_value = 0.0;
    bool defined = true;
    std::vector<Precondition> preconditions;
    std::optional<double> measured_error;

    bool preconditions_hold() const;
    /// Dominance is asserted only for defined reports with every precondition true.
    bool checkable() const { return defined && preconditions_hold(); }
    /// bound_value re-evaluated from the stored constituents.
    double recompute() const;
    nlohmann::json to_json() const;
};

struct BoundOptions {
    LogBase log_base = LogBase::binary;
    /// Also run the protected evolution and store measured_error.
    bool measure = false;
};

/// Protection by C_k = c0^k.
BoundReport theorem1_bound(const HamiltonianModel &model, const Operator &c0, double t, std::size_t r,
                           const BoundOptions &options = {});
/// Schedule must satisfy is_powers_of_base().
BoundReport theorem1_bound(const HamiltonianModel &model, const ProtectionSchedule &schedule, double t,
                           std::size_t r, const BoundOptions &options = {});
BoundReport appendixC_bound(const HamiltonianModel &model, const ProtectionSchedule &schedule, double t,
                            std::size_t r, const BoundOptions &options = {});

/// ||prod_k (c0^k)^dag S c0^k - e^{-iHt}|| for PF1.
double measured_error_powers(const DenseStepper &stepper, const Operator &c0, double dt, std::size_t r);

struct Lemma1Check {
    double residual = 0.0;  // ||H_eff - H + (i/2) v0 dt||
    double bound = 0.0;     // chi dt^2
    std::vector<Precondition> preconditions;
    bool preconditions_hold() const;
};

Lemma1Check lemma1_check(const HamiltonianModel &model, double dt);

/// The three step-size conditions shared by Lemma 1 and the main theorem.
std::vector<Precondition> lemma1_preconditions(const CommutatorSums &sums, double h_norm, double dt);

// Zeno bounds. Values are NaN and `defined` false when the kick has a single eigenphase.
struct ZenoBound {
    double value = 0.0;
    bool defined = true;
    double xi = 0.0;
    std::size_t m = 0;
};

double zeno_bound_new_value(double xi, std::size_t m, double g_norm, double t, std::size_t r,
                            LogBase base = LogBase::binary);
double zeno_bound_sp_value(double xi, std::size_t m, double g_norm, double v_norm, double t, std::size_t r,
                           LogBase base = LogBase::binary);
double zeno_bound_old_value(double xi, std::size_t m, double g_norm, double t, std::size_t r);
/// 2 xi sqrt(m) (||H|| + ||V||) ||V|| t^2 log r / r
double lemma2_bound_value(double xi, std::size_t m, double h_norm, double v_norm, double t, std::size_t r,
                          LogBase base = LogBase::binary);

ZenoBound zeno_bound_new(const Operator &g, const Operator &kick, double t, std::size_t r,
                         LogBase base = LogBase::binary);
/// Requires ||[H, kick]|| <= 1e-10; G = H + V.
ZenoBound zeno_bound_sp(const Operator &h, const Operator &v, const Operator &kick, double t, std::size_t r,
                        LogBase base = LogBase::binary);
ZenoBound zeno_bound_old(const Operator &g, const Operator &kick, double t, std::size_t r);

/// sum_mu P_mu G P_mu over the kick eigenspaces.
Operator zeno_generator(const Operator &g, const KickSpectrum &spectrum);

/// ||U_kick^{dag r} (U_kick e^{-i t G / r})^r - e^{-i t G_Zeno}||
double zeno_error_measured(const Operator &g, const Operator &kick, double t, std::size_t r);

/// ||(1/r) sum_{k=1}^r U^k G U^{-k} - sum_mu P_mu G P_mu||
double ergodic_deviation(const Operator &u, const Operator &g, std::size_t r);

}  // namespace symprot
