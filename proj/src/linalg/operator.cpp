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
#include <string>

#include "symprot/linalg.hpp"

namespace symprot {

Layout::Layout(std::vector<std::size_t> factor_dims) : factors_(std::move(factor_dims)) {
    dim_ = 1;
    for (std::size_t d : factors_) {
        require(d >= 1, "layout factor dimensions must be positive");
        require(dim_ <= (std::size_t{1} << 40) / d, "layout dimension overflow");
        dim_ *= d;
    }
}

Layout Layout::qubits(std::size_t n) {
    return Layout(std::vector<std::size_t>(n, 2));
}

std::size_t Layout::stride(std::size_t f) const {
    std::size_t s = 1;
    for (std::size_t g = factors_.size(); g-- > f + 1;) {
        s *= factors_[g];
    }
    return s;
}

Layout Layout::concat(const Layout &other) const {
    std::vector<std::size_t> dims = factors_;
    dims.insert(dims.end(), other.factors_.begin(), other.factors_.end());
    return Layout(std::move(dims));
}

Operator::Operator(Layout layout, Matrix m) : layout_(std::move(layout)), m_(std::move(m)) {
    require(m_.rows() == m_.cols(), "operator matrix must be square");
    require(static_cast<std::size_t>(m_.rows()) == layout_.dim(),
            "operator matrix size " + std::to_string(m_.rows()) + " does not match layout dimension " +
                std::to_string(layout_.dim()));
}

Operator::Operator(Matrix m) : layout_(std::vector<std::size_t>{static_cast<std::size_t>(m.rows())}), m_(std::move(m)) {
    require(m_.rows() == m_.cols(), "operator matrix must be square");
}

Operator Operator::identity(const Layout &layout) {
    require(layout.dim() <= kDenseDimCap, "operator dimension exceeds the dense cap");
    const auto d = static_cast<Eigen::Index>(layout.dim());
    return Operator(layout, Matrix::Identity(d, d));
}

Operator Operator::zero(const Layout &layout) {
    require(layout.dim() <= kDenseDimCap, "operator dimension exceeds the dense cap");
    const auto d = static_cast<Eigen::Index>(layout.dim());
    return Operator(layout, Matrix::Zero(d, d));
}

Operator Operator::diagonal(const Layout &layout, const std::vector<cplx> &entries) {
    require(entries.size() == layout.dim(), "diagonal length does not match layout");
    const auto d = static_cast<Eigen::Index>(layout.dim());
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        m(i, i) = entries[static_cast<std::size_t>(i)];
    }
    return Operator(layout, std::move(m));
}

Operator Operator::adjoint() const {
    return Operator(layout_, m_.adjoint());
}

bool Operator::is_hermitian(double tol) const {
    const double scale = std::max(1.0, max_abs());
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool Operator::is_unitary(double tol) const {
    const auto d = m_.rows();
    return (m_.adjoint() * m_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

double Operator::max_abs() const {
    return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

double Operator::max_abs_diff(const Operator &other) const {
    require(dim() == other.dim(), "dimension mismatch");
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Operator operator*(const Operator &a, const Operator &b) {
    require(a.dim() == b.dim(), "operator product: dimension mismatch");
    return Operator(a.layout(), a.matrix() * b.matrix());
}

Operator operator+(const Operator &a, const Operator &b) {
    require(a.dim() == b.dim(), "operator sum: dimension mismatch");
    return Operator(a.layout(), a.matrix() + b.matrix());
}

Operator operator-(const Operator &a, const Operator &b) {
    require(a.dim() == b.dim(), "operator difference: dimension mismatch");
    return Operator(a.layout(), a.matrix() - b.matrix());
}

Operator operator*(cplx s, const Operator &a) {
    return Operator(a.layout(), s * a.matrix());
}

DiagonalOperator::DiagonalOperator(Layout layout, std::vector<double> values)
    : layout_(std::move(layout)), values_(std::move(values)) {
    require(values_.size() == layout_.dim(), "diagonal length does not match layout");
}

Operator DiagonalOperator::dense() const {
    require(dim() <= kDenseDimCap, "dense materialization exceeds the dimension cap");
    std::vector<cplx> entries(values_.begin(), values_.end());
    return Operator::diagonal(layout_, entries);
}

StateVec::StateVec(Layout layout, Vector amplitudes, bool normalized)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)), normalized_(normalized) {
    require(static_cast<std::size_t>(amps_.size()) == layout_.dim(), "state length does not match layout");
    if (normalized_) {
        require(std::abs(amps_.norm() - 1.0) <= 1e-10, "state tagged normalized has norm != 1");
    }
}

StateVec StateVec::basis(const Layout &layout, std::size_t index) {
    require(index < layout.dim(), "basis index out of range");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVec(layout, std::move(v));
}

double StateVec::renormalize() {
    const double n = amps_.norm();
    if (n > 0) {
        amps_ /= n;
    }
    normalized_ = true;
    return n;
}

Operator kron(const Operator &a, const Operator &b) {
    const auto da = a.matrix().rows();
    const auto db = b.matrix().rows();
    require(static_cast<std::size_t>(da) * static_cast<std::size_t>(db) <= kDenseDimCap,
            "kron result exceeds the dense dimension cap");
    Matrix m(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return Operator(a.layout().concat(b.layout()), std::move(m));
}

Operator commutator(const Operator &a, const Operator &b) {
    require(a.dim() == b.dim(), "commutator: dimension mismatch");
    return Operator(a.layout(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

}  // namespace symprot
