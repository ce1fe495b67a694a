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

#include <string>

#include "symprot/kernels.hpp"
#include "symprot/models.hpp"
#include "models/pieces.hpp"

namespace symprot {

namespace pauli {
Matrix I() {
    return Matrix::Identity(2, 2);
}
Matrix X() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
Matrix Y() {
    Matrix m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}
Matrix Z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}
Matrix H() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}
}  // namespace pauli

namespace detail {

void classify_piece(LocalPiece &piece) {
    const auto d = piece.op.rows();
    require(piece.op.cols() == d, "piece operator must be square");
    require(d == (Eigen::Index{1} << piece.qubits.size()), "piece operator size does not match its qubit count");
    require((piece.op - piece.op.adjoint()).cwiseAbs().maxCoeff() <= 1e-12, "piece operator must be Hermitian");
    piece.involutory = (piece.op * piece.op - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12;
    bool monomial = true;
    for (Eigen::Index r = 0; r < d && monomial; ++r) {
        int nonzeros = 0;
        for (Eigen::Index c = 0; c < d; ++c) {
            nonzeros += std::abs(piece.op(r, c)) > 1e-14 ? 1 : 0;
        }
        monomial = nonzeros <= 1;
    }
    piece.monomial = monomial;
}

LocalPiece make_piece(const std::vector<KronFactor> &factors, double coefficient) {
    LocalPiece piece;
    piece.coefficient = coefficient;
    Matrix op = Matrix::Identity(1, 1);
    for (const auto &f : factors) {
        require(f.op.rows() == (Eigen::Index{1} << f.bits.size()), "kron factor size does not match its bits");
        Matrix next(op.rows() * f.op.rows(), op.cols() * f.op.cols());
        for (Eigen::Index i = 0; i < op.rows(); ++i) {
            for (Eigen::Index j = 0; j < op.cols(); ++j) {
                next.block(i * f.op.rows(), j * f.op.cols(), f.op.rows(), f.op.cols()) = op(i, j) * f.op;
            }
        }
        op = std::move(next);
    }
    // Most significant factor first; local bit 0 is the last factor's lowest bit.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        piece.qubits.insert(piece.qubits.end(), it->bits.begin(), it->bits.end());
    }
    piece.op = std::move(op);
    classify_piece(piece);
    return piece;
}

}  // namespace detail

HamiltonianModel::HamiltonianModel(Layout layout, std::vector<FactorRole> roles, std::vector<Term> terms,
                                   ModelMeta meta)
    : layout_(std::move(layout)), roles_(std::move(roles)), terms_(std::move(terms)), meta_(std::move(meta)) {
    require(roles_.size() == layout_.num_factors(), "one role per layout factor required");
    require(!terms_.empty(), "a model needs at least one term");
    const std::size_t d = layout_.dim();
    require((d & (d - 1)) == 0, "register dimension must be a power of two");
    while ((std::size_t{1} << num_bits_) < d) {
        ++num_bits_;
    }
    for (auto &term : terms_) {
        require(term.diagonal.empty() || term.diagonal.size() == d, "term diagonal length must equal dim");
        for (auto &piece : term.pieces) {
            for (unsigned q : piece.qubits) {
                require(q < num_bits_, "piece qubit outside the register");
            }
            detail::classify_piece(piece);
        }
    }
}

Matrix embed_piece(const LocalPiece &piece, std::size_t dim) {
    const auto k = static_cast<unsigned>(piece.qubits.size());
    const std::size_t local = std::size_t{1} << k;
    std::size_t mask = 0;
    std::vector<std::size_t> offsets(local);
    for (std::size_t l = 0; l < local; ++l) {
        std::size_t off = 0;
        for (unsigned j = 0; j < k; ++j) {
            if ((l >> j) & 1U) {
                off |= std::size_t{1} << piece.qubits[j];
            }
        }
        offsets[l] = off;
    }
    for (unsigned q : piece.qubits) {
        mask |= std::size_t{1} << q;
    }
    const auto D = static_cast<Eigen::Index>(dim);
    Matrix out = Matrix::Zero(D, D);
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & mask) {
            continue;
        }
        for (std::size_t r = 0; r < local; ++r) {
            for (std::size_t c = 0; c < local; ++c) {
                const cplx v = piece.op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                if (v != cplx(0.0)) {
                    out(static_cast<Eigen::Index>(b | offsets[r]), static_cast<Eigen::Index>(b | offsets[c])) +=
                        piece.coefficient * v;
                }
            }
        }
    }
    return out;
}

Operator HamiltonianModel::dense_term(std::size_t i) const {
    require(dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    const Term &term = terms_.at(i);
    const auto D = static_cast<Eigen::Index>(dim());
    Matrix m = Matrix::Zero(D, D);
    for (const auto &piece : term.pieces) {
        m += embed_piece(piece, dim());
    }
    for (std::size_t b = 0; b < term.diagonal.size(); ++b) {
        m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) += term.diagonal[b];
    }
    return Operator(layout_, std::move(m));
}

std::vector<Operator> HamiltonianModel::dense_terms() const {
    std::vector<Operator> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        out.push_back(dense_term(i));
    }
    return out;
}

Operator HamiltonianModel::dense_total() const {
    require(dim() <= kDenseDimCap, "model dimension exceeds the dense cap");
    Operator total = Operator::zero(layout_);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        total = total + dense_term(i);
    }
    return total;
}

Vector HamiltonianModel::apply_term(std::size_t i, const Vector &psi) const {
    require(static_cast<std::size_t>(psi.size()) == dim(), "state length does not match the model");
    const Term &term = terms_.at(i);
    Vector out = Vector::Zero(psi.size());
    Vector scratch;
    for (const auto &piece : term.pieces) {
        scratch = psi;
        const Matrix m = piece.coefficient * piece.op;
        kernels::apply_dense_block(scratch.data(), dim(), piece.qubits.data(),
                                   static_cast<unsigned>(piece.qubits.size()), m.data());
        out += scratch;
    }
    for (std::size_t b = 0; b < term.diagonal.size(); ++b) {
        out(static_cast<Eigen::Index>(b)) += term.diagonal[b] * psi(static_cast<Eigen::Index>(b));
    }
    return out;
}

Vector HamiltonianModel::apply(const Vector &psi) const {
    Vector out = Vector::Zero(psi.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        out += apply_term(i, psi);
    }
    return out;
}

HamiltonianModel model_from_dense_terms(const std::vector<Operator> &terms, const std::string &name) {
    require(!terms.empty(), "at least one term required");
    const std::size_t d = terms.front().dim();
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < d) {
        ++bits;
    }
    require((std::size_t{1} << bits) == d && bits >= 1 && bits <= kernels::kMaxBlockQubits,
            "dense-term models need a 2..64 dimensional qubit register");
    std::vector<Term> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        require(terms[i].dim() == d, "all terms must share one dimension");
        require(terms[i].is_hermitian(), "terms must be Hermitian");
        LocalPiece piece;
        for (unsigned j = 0; j < bits; ++j) {
            piece.qubits.push_back(j);
        }
        // Matrix row index already uses bit j of the global index as local bit j.
        piece.op = terms[i].matrix();
        out.push_back(Term{"T" + std::to_string(i + 1), {piece}, {}});
    }
    ModelMeta meta;
    meta.kind = name;
    meta.n = static_cast<int>(bits);
    return HamiltonianModel(Layout::qubits(bits), std::vector<FactorRole>(bits, FactorRole::site_qubit),
                            std::move(out), std::move(meta));
}

DiagonalOperator total_sz(int n) {
    require(n >= 1 && n <= 20, "qubit count out of range");
    const std::size_t d = std::size_t{1} << n;
    std::vector<double> v(d);
    for (std::size_t b = 0; b < d; ++b) {
        v[b] = static_cast<double>(n - 2 * __builtin_popcountll(b));
    }
    return DiagonalOperator(Layout::qubits(static_cast<std::size_t>(n)), std::move(v));
}

nlohmann::json model_to_json(const HamiltonianModel &model) {
    const ModelMeta &m = model.meta();
    nlohmann::json j;
    j["kind"] = m.kind;
    j["n"] = m.n;
    j["layout"] = model.layout().factors();
    std::vector<std::string> roles;
    for (FactorRole r : model.roles()) {
        roles.emplace_back(r == FactorRole::site_qubit ? "site" : "link");
    }
    j["roles"] = roles;
    std::vector<std::string> labels;
    for (const auto &t : model.terms()) {
        labels.push_back(t.label);
    }
    j["terms"] = labels;
    if (m.kind == "heisenberg" || m.kind == "mbl") {
        j["seed"] = m.seed;
        j["couplings"] = m.couplings;
    }
    if (m.kind == "mbl") {
        j["h"] = m.h;
        j["fields"] = m.fields;
    }
    if (m.schwinger) {
        j["cutoff"] = m.schwinger->cutoff;
        j["x"] = m.schwinger->x;
        j["mu"] = m.schwinger->mu;
    }
    return j;
}

}  // namespace symprot
