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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symprot/linalg.hpp"

namespace symprot {

enum class FactorRole { site_qubit, link_boson };

/// coefficient * op acting on a few qubits of the register.
///
/// qubits[j] is the global bit position (bit 0 = last basis digit) of local
/// bit j of op's row/column index.
struct LocalPiece {
    std::vector<unsigned> qubits;
    double coefficient = 1.0;
    Matrix op;
    bool involutory = false;  // op * op == I
    bool monomial = false;    // one nonzero per row
};

/// One Hamiltonian term: mutually commuting pieces plus an optional
/// full-register real diagonal that commutes with them.
struct Term {
    std::string label;
    std::vector<LocalPiece> pieces;
    std::vector<double> diagonal;
};

struct SchwingerInfo {
    int sites = 0;
    int cutoff = 0;  // Lambda; each link holds 2*Lambda levels
    double x = 0.0;
    double mu = 0.0;
    std::vector<unsigned> site_bit;  // site i (0-based) -> global bit
    std::vector<unsigned> link_lsb;  // link i (0-based, between sites i, i+1) -> lowest register bit
    unsigned link_bits = 0;
};

struct ModelMeta {
    std::string kind;  // "heisenberg", "mbl", "schwinger", "custom"
    int n = 0;
    double h = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> couplings;  // J_ij for i<j, lexicographic (heisenberg)
    std::vector<double> fields;     // h_i (mbl)
    std::optional<SchwingerInfo> schwinger;
};

/// Ordered list of Hermitian terms on a tensor-product register.
/// Term order is the application order of a first-order step: term 0 acts first.
class HamiltonianModel {
  public:
    HamiltonianModel(Layout layout, std::vector<FactorRole> roles, std::vector<Term> terms, ModelMeta meta);

    const Layout &layout() const { return layout_; }
    std::size_t dim() const { return layout_.dim(); }
    unsigned num_bits() const { return num_bits_; }
    const std::vector<FactorRole> &roles() const { return roles_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    const ModelMeta &meta() const { return meta_; }

    /// Dense matrix of term i; requires dim <= kDenseDimCap.
    Operator dense_term(std::size_t i) const;
    std::vector<Operator> dense_terms() const;
    Operator dense_total() const;

    /// H psi without materializing H.
    Vector apply(const Vector &psi) const;
    Vector apply_term(std::size_t i, const Vector &psi) const;

  private:
    Layout layout_;
    std::vector<FactorRole> roles_;
    std::vector<Term> terms_;
    ModelMeta meta_;
    unsigned num_bits_ = 0;
};

/// Dense matrix of one piece embedded in the full register (coefficient included).
Matrix embed_piece(const LocalPiece &piece, std::size_t dim);

/// Builds a model from dense Hermitian terms on a qubit register (tests, toy models).
HamiltonianModel model_from_dense_terms(const std::vector<Operator> &terms, const std::string &name = "custom");

HamiltonianModel build_random_heisenberg(int n, std::uint64_t seed);
HamiltonianModel build_mbl_heisenberg(int n, double h, std::uint64_t seed);
HamiltonianModel build_schwinger(int n, int cutoff, double x, double mu);

/// Schwinger link operators on a single 2*Lambda-level register (dense).
struct LinkOperators {
    Matrix F, U, A, B, A_tilde, B_tilde;
};
LinkOperators link_operators(int cutoff);

/// Gauss-law generators G_i, i = 0..n-1, as integer-valued diagonals.
std::vector<DiagonalOperator> gauge_operators(const HamiltonianModel &model);

struct PhysicalSubspace {
    std::vector<std::size_t> basis_indices;  // sorted
    DiagonalOperator projector;
    std::size_t dim_phys() const { return basis_indices.size(); }
};

PhysicalSubspace physical_projector(const HamiltonianModel &model);

struct GroundState {
    StateVec state;
    double energy = 0.0;
    bool degenerate = false;
};

/// Lowest eigenvector of the Hamiltonian restricted to the physical subspace.
GroundState ground_state_physical(const HamiltonianModel &model);

/// sum_i Z_i as a diagonal on an n-qubit register.
DiagonalOperator total_sz(int n);

nlohmann::json model_to_json(const HamiltonianModel &model);

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
Matrix H();  // Hadamard
}  // namespace pauli

}  // namespace symprot
