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

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symprot/common.hpp"

namespace symprot {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered local factor dimensions of a tensor-product Hilbert space.
///
/// Basis index ordering follows kron: the first factor is the most
/// significant digit, the last factor has stride 1.
class Layout {
  public:
    Layout() = default;
    explicit Layout(std::vector<std::size_t> factor_dims);
    static Layout qubits(std::size_t n);

    std::size_t dim() const { return dim_; }
    std::size_t num_factors() const { return factors_.size(); }
    const std::vector<std::size_t> &factors() const { return factors_; }
    std::size_t factor(std::size_t f) const { return factors_.at(f); }
    std::size_t stride(std::size_t f) const;

    Layout concat(const Layout &other) const;

    bool operator==(const Layout &other) const { return factors_ == other.factors_; }

  private:
    std::vector<std::size_t> factors_;
    std::size_t dim_ = 1;
};

/// Dense complex square matrix on a Layout. Immutable once built; all
/// arithmetic returns new operators.
class Operator {
  public:
    Operator() = default;
    Operator(Layout layout, Matrix m);
    explicit Operator(Matrix m);

    static Operator identity(const Layout &layout);
    static Operator zero(const Layout &layout);
    static Operator diagonal(const Layout &layout, const std::vector<cplx> &entries);

    const Layout &layout() const { return layout_; }
    std::size_t dim() const { return layout_.dim(); }
    const Matrix &matrix() const { return m_; }
    cplx operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

    Operator adjoint() const;

    /// max-entry |A - A^dag| <= tol * max(1, max-entry |A|)
    bool is_hermitian(double tol = 1e-12) const;
    /// max-entry |A^dag A - I| <= tol
    bool is_unitary(double tol = 1e-10) const;

    double max_abs() const;
    double max_abs_diff(const Operator &other) const;

  private:
    Layout layout_;
    Matrix m_;
};

Operator operator*(const Operator &a, const Operator &b);
Operator operator+(const Operator &a, const Operator &b);
Operator operator-(const Operator &a, const Operator &b);
Operator operator*(cplx s, const Operator &a);

/// Real diagonal operator stored as its diagonal (gauge generators,
/// projectors, magnetization). Never materialized unless asked.
class DiagonalOperator {
  public:
    DiagonalOperator() = default;
    DiagonalOperator(Layout layout, std::vector<double> values);

    const Layout &layout() const { return layout_; }
    std::size_t dim() const { return layout_.dim(); }
    const std::vector<double> &values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    Operator dense() const;

  private:
    Layout layout_;
    std::vector<double> values_;
};

/// Pure state amplitudes on a Layout.
class StateVec {
  public:
    StateVec() = default;
    /// `normalized` tags the state; when true the norm is checked to 1e-10.
    StateVec(Layout layout, Vector amplitudes, bool normalized = true);

    static StateVec basis(const Layout &layout, std::size_t index);

    const Layout &layout() const { return layout_; }
    std::size_t dim() const { return layout_.dim(); }
    const Vector &amplitudes() const { return amps_; }
    Vector &amplitudes() { return amps_; }
    bool tagged_normalized() const { return normalized_; }

    double norm() const { return amps_.norm(); }
    /// Rescales to unit norm and returns the norm before rescaling.
    double renormalize();
    void tag_unnormalized() { normalized_ = false; }

  private:
    Layout layout_;
    Vector amps_;
    bool normalized_ = true;
};

Operator kron(const Operator &a, const Operator &b);
Operator commutator(const Operator &a, const Operator &b);

/// Reusable eigendecomposition h = V diag(w) V^dag of a Hermitian operator.
class HermitianEigen {
  public:
    explicit HermitianEigen(const Operator &h);

    const Layout &layout() const { return layout_; }
    const Eigen::VectorXd &eigenvalues() const { return values_; }
    const Matrix &eigenvectors() const { return vectors_; }

    /// exp(-i h t)
    Operator exp_minus_i(double t) const;

  private:
    Layout layout_;
    Eigen::VectorXd values_;
    Matrix vectors_;
};

/// exp(-i h t) for Hermitian h.
Operator expm_hermitian(const Operator &h, double t);

struct SpectralNormOptions {
    double rel_tol = 1e-9;
    int max_iterations = 10000;
    std::uint64_t seed = 0x5EC7A1ULL;
};

/// Largest singular value. Power iteration on A^dag A, falling back to a full
/// SVD when the iteration stagnates.
double spectral_norm(const Matrix &a, const SpectralNormOptions &options = {});
double spectral_norm(const Operator &a);

/// Largest singular value from a full SVD; the reference route.
double spectral_norm_svd(const Matrix &a);

/// Anti-Hermitian L with exp(L) = u, eigenphases taken in (-pi, pi).
/// Throws NumericalError when an eigenphase sits within 1e-9 of +-pi.
Operator principal_log_unitary(const Operator &u);

inline constexpr double kDefaultClusterTol = 1e-9;

/// u = sum_mu exp(-i phase_mu) P_mu with phases in (-pi, pi] clustered so that
/// distinct phases are more than cluster_tol apart on the circle.
struct EigenPhases {
    std::vector<double> phases;
    std::vector<Operator> projectors;
};

EigenPhases eigphases_unitary(const Operator &u, double cluster_tol = kDefaultClusterTol);

}  // namespace symprot
