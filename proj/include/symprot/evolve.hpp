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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symprot/kernels.hpp"
#include "symprot/linalg.hpp"
#include "symprot/models.hpp"
#include "symprot/symmetry.hpp"

namespace symprot {

enum class Algorithm { pf1, pf2, pf4, mpf };
enum class Backend { dense, statevec };

const char *to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string &name);

/// kappa_4 = 1 / (4 - 4^{1/4})
double suzuki_kappa4();

/// Where the noise rotation enters a protected step.
///   inside_protection: C_k^dag N S C_k  (noise sees the rotated frame)
///   after_step:        N C_k^dag S C_k
enum class NoisePlacement { inside_protection, after_step };

struct NoiseSpec {
    double eta = 0.0;
    std::size_t lambda = 1;
    std::uint64_t seed = 0;
    bool per_qubit_axes = false;
    NoisePlacement placement = NoisePlacement::inside_protection;
};

struct EvolutionPlan {
    Algorithm algorithm = Algorithm::pf1;
    double dt = 0.0;
    std::size_t r = 1;
    ProtectionSchedule schedule = ProtectionSchedule::identity(1);
    Backend backend = Backend::dense;
    std::optional<NoiseSpec> noise;
};

/// One application slot of a product formula: term index and time.
struct Slot {
    std::size_t term;
    double time;
};

/// Slots of one P2(dt) step in application order (first slot acts first).
std::vector<Slot> pf2_slots(const std::vector<std::size_t> &order, double dt);
/// Slots of PF1/PF2/PF4 in application order. MPF has two branches and is rejected.
std::vector<Slot> product_formula_slots(Algorithm algorithm, const std::vector<std::size_t> &order, double dt);

/// Dense term exponentials with cached eigendecompositions.
class DenseStepper {
  public:
    explicit DenseStepper(const HamiltonianModel &model);

    const Layout &layout() const { return layout_; }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Operator> &terms() const { return terms_; }
    const Operator &total() const { return total_; }

    Operator term_exponential(std::size_t term, double time) const;
    Operator product(const std::vector<Slot> &slots) const;
    /// Step operator; `order` is the PF1 application order (defaults to list order).
    Operator step(Algorithm algorithm, double dt, const std::vector<std::size_t> &order = {}) const;
    Operator exact(double t) const;

  private:
    Layout layout_;
    std::vector<Operator> terms_;
    Operator total_;
    std::vector<HermitianEigen> eig_;
    std::optional<HermitianEigen> total_eig_;
};

Operator pf1_step(const HamiltonianModel &model, double dt);
Operator pf2_step(const HamiltonianModel &model, double dt);
Operator pf4_step(const HamiltonianModel &model, double dt);
Operator mpf_step(const HamiltonianModel &model, double dt);
Operator exact_evolution(const HamiltonianModel &model, double t);

/// H_eff with step = exp(-i H_eff dt).
Operator effective_hamiltonian(const Operator &step, double dt);

struct DenseRunResult {
    Operator final_operator;
    Operator exact;
    double error = 0.0;
};

/// prod_k C_k^dag S C_k against exp(-i H r dt), spectral-norm error.
DenseRunResult protected_run_dense(const HamiltonianModel &model, const EvolutionPlan &plan);
DenseRunResult protected_run_dense(const DenseStepper &stepper, const EvolutionPlan &plan);

double leakage(const StateVec &state, const PhysicalSubspace &phys);
/// Weight outside the physical subspace relative to the total norm.
double leakage(const Vector &amplitudes, const PhysicalSubspace &phys);

/// Single-qubit noise rotation exp(-i eta sigma.n) for step k (1-based).
Matrix noise_rotation(const NoiseSpec &spec, std::size_t k, std::size_t qubit_slot = 0);

/// Applies the step-k noise to every site qubit of the model register.
void apply_noise(Vector &psi, const HamiltonianModel &model, const NoiseSpec &spec, std::size_t k);
StateVec apply_noise(const StateVec &state, const HamiltonianModel &model, const NoiseSpec &spec, std::size_t k);

/// Matrix-free stepper: local block exponentials cached per (term, time).
class StatevecStepper {
  public:
    explicit StatevecStepper(const HamiltonianModel &model);

    const HamiltonianModel &model() const { return *model_; }

    /// psi <- exp(-i H_term time) psi
    void apply_term(Vector &psi, std::size_t term, double time);
    void apply_slots(Vector &psi, const std::vector<Slot> &slots);
    /// One unprotected step. Returns the pre-renormalization norm for MPF, 1 otherwise.
    double apply_step(Vector &psi, Algorithm algorithm, double dt, const std::vector<std::size_t> &order);

    /// psi <- C psi or C^dag psi for a structured protection element.
    void apply_protection(Vector &psi, const ProtectionSchedule &schedule, const StepProtection &p,
                          bool adjoint) const;

    std::size_t cached_blocks() const { return cache_.size(); }

  private:
    struct Gate {
        std::vector<unsigned> qubits;
        bool sparse = false;
        Matrix dense;  // row-major copy in `data`
        std::vector<cplx> data;
        std::vector<std::uint32_t> col0, col1;
        std::vector<cplx> val0, val1;
    };
    struct CompiledTerm {
        std::vector<Gate> gates;
        std::vector<cplx> phases;  // exp(-i time diag), empty if no diagonal
    };
    const CompiledTerm &compiled(std::size_t term, double time);
    static void run_gate(Vector &psi, const Gate &gate);

    std::shared_ptr<const HamiltonianModel> model_;
    std::map<std::pair<std::size_t, std::uint64_t>, CompiledTerm> cache_;
    Vector scratch_a_, scratch_b_;
};

struct StatevecRunResult {
    StateVec final_state;
    std::vector<double> leakage;    // index 0: initial state; index k: after step k
    std::vector<double> mpf_norms;  // per step, MPF only
};

StatevecRunResult protected_run_statevec(const HamiltonianModel &model, const EvolutionPlan &plan,
                                         const StateVec &initial, const PhysicalSubspace *phys = nullptr);
StatevecRunResult protected_run_statevec(StatevecStepper &stepper, const EvolutionPlan &plan,
                                         const StateVec &initial, const PhysicalSubspace *phys = nullptr);

}  // namespace symprot
