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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symprot/linalg.hpp"
#include "symprot/models.hpp"

namespace symprot {

enum class ScheduleKind { identity, haar_su2, hadamard_det, u1_z, gauge, term_ordering };
enum class ScheduleMode { independent, powers_of_c0, uniform_angles };
enum class SymmetryGroup { none, su2_global, u1_global, z2l_gauge, u1_gauge };

const char *to_string(ScheduleKind kind);
const char *to_string(ScheduleMode mode);
const char *to_string(SymmetryGroup group);

/// Protection element of one step, in structured form.
struct StepProtection {
    enum class Form { identity, global_product, gauge_phases, permutation };
    Form form = Form::identity;
    Matrix single_qubit;                    // global_product: C_k = W^{(x) n}
    std::vector<double> gauge_angles;       // gauge_phases: C_k = exp(-i sum_i phi_i G_i)
    std::vector<std::size_t> permutation;   // permutation: term application order
};

/// Rule producing C_k (or a term ordering) for steps k = 1..r.
/// Immutable; step(k) is a pure function of (kind, mode, seed, k).
class ProtectionSchedule {
  public:
    static ProtectionSchedule identity(std::size_t r);
    static ProtectionSchedule haar_su2(int n, std::size_t r, std::uint64_t seed);
    static ProtectionSchedule hadamard_det(int n, std::size_t r);
    static ProtectionSchedule u1_z(int n, std::size_t r, std::uint64_t seed, ScheduleMode mode);
    static ProtectionSchedule gauge(const HamiltonianModel &model, std::size_t r, SymmetryGroup group,
                                    ScheduleMode mode, std::uint64_t seed);
    static ProtectionSchedule random_ordering(std::size_t num_terms, std::size_t r, std::uint64_t seed);

    ScheduleKind kind() const { return kind_; }
    ScheduleMode mode() const { return mode_; }
    SymmetryGroup group() const { return group_; }
    std::size_t steps() const { return r_; }
    std::uint64_t seed() const { return seed_; }

    /// Same rule with a different step count.
    ProtectionSchedule with_steps(std::size_t r) const;

    /// C_k = C_1^k for every k.
    bool is_powers_of_base() const;
    /// C_k acts by conjugation (false for identity and term orderings).
    bool conjugates() const { return kind_ != ScheduleKind::identity && kind_ != ScheduleKind::term_ordering; }

    StepProtection step(std::size_t k) const;

    /// Dense C_k on the given layout (identity for term orderings).
    Operator materialize(std::size_t k, const Layout &layout) const;
    /// Diagonal of C_k when C_k is diagonal in the computational basis.
    std::optional<std::vector<cplx>> diagonal(std::size_t k, std::size_t dim) const;
    /// Term application order of step k (identity order unless term_ordering).
    std::vector<std::size_t> ordering(std::size_t k, std::size_t num_terms) const;

    /// C_1 of a powers-of-base schedule.
    Operator base_unitary(const Layout &layout) const;

    /// Diagonal phases exp(-i sum_i angles[i] G_i) for this schedule's gauge generators.
    std::vector<cplx> gauge_phases(const std::vector<double> &angles) const;

    nlohmann::json to_json() const;

  private:
    ProtectionSchedule() = default;

    ScheduleKind kind_ = ScheduleKind::identity;
    ScheduleMode mode_ = ScheduleMode::independent;
    SymmetryGroup group_ = SymmetryGroup::none;
    std::size_t r_ = 1;
    std::uint64_t seed_ = 0;
    int n_ = 0;
    std::size_t num_terms_ = 0;
    int cutoff_ = 0;

    // Gauge generators as integers, generator-major.
    struct GaugeData {
        std::size_t dim = 0;
        std::vector<std::vector<int>> labels;
        int min_label = 0;
        int max_label = 0;
    };
    std::shared_ptr<const GaugeData> gauge_;
    // Base draw of powers/uniform schedules.
    std::vector<double> base_angles_;
    std::vector<int> base_steps_;  // Z_2Lambda base multiples m_i
};

/// W^{(x) n} as a dense operator.
Operator tensor_power(const Matrix &w, int n);

/// Haar-random SU(2) element from four standard normals.
Matrix haar_su2_matrix(std::uint64_t seed);

struct KickSpectrum {
    std::size_t m = 0;
    std::optional<double> xi;  // undefined when m == 1
    std::vector<double> phases;
    std::vector<Operator> projectors;
};

KickSpectrum kick_spectrum(const Operator &c0, double tol = kDefaultClusterTol);

/// max over pairs of 1 / |sin((phi_a - phi_b) / 2)|; nullopt for fewer than two phases.
std::optional<double> inverse_spectral_gap(const std::vector<double> &phases);

}  // namespace symprot
