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

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "symprot/linalg.hpp"
#include "symprot/rng.hpp"

namespace symprot {

HermitianEigen::HermitianEigen(const Operator &h) : layout_(h.layout()) {
    require(h.is_hermitian(1e-10), "expm_hermitian requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

Operator HermitianEigen::exp_minus_i(double t) const {
    const auto d = values_.size();
    Vector phases(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        phases(i) = std::polar(1.0, -values_(i) * t);
    }
    return Operator(layout_, vectors_ * phases.asDiagonal() * vectors_.adjoint());
}

Operator expm_hermitian(const Operator &h, double t) {
    return HermitianEigen(h).exp_minus_i(t);
}

double spectral_norm_svd(const Matrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double spectral_norm(const Matrix &a, const SpectralNormOptions &options) {
    if (a.size() == 0) {
        return 0.0;
    }
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        return 0.0;
    }
    // Small matrices: the SVD is cheaper than iterating.
    if (a.cols() <= 16) {
        return spectral_norm_svd(a);
    }
    Rng rng(options.seed);
    Vector v(a.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cplx(rng.normal(), rng.normal());
    }
    v.normalize();
    double best_residual = INFINITY;
    int since_improvement = 0;
    for (int it = 0; it < options.max_iterations; ++it) {
        const Vector w = a * v;
        Vector y = a.adjoint() * w;
        const double lambda = v.dot(y).real();
        const double residual = (y - lambda * v).norm();
        if (lambda <= 0.0) {
            break;
        }
        if (residual <= options.rel_tol * lambda) {
            return std::sqrt(lambda);
        }
        if (residual < 0.5 * best_residual) {
            best_residual = residual;
            since_improvement = 0;
        } else if (++since_improvement > 64) {
            break;
        }
        v = y / y.norm();
    }
    return spectral_norm_svd(a);
}

double spectral_norm(const Operator &a) {
    return spectral_norm(a.matrix());
}

namespace {

struct UnitarySchur {
    Eigen::VectorXcd values;
    Matrix vectors;
};

UnitarySchur unitary_schur(const Operator &u) {
    require(u.is_unitary(1e-8), "operator is not unitary");
    Eigen::ComplexSchur<Matrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) {
        throw NumericalError("Schur decomposition did not converge");
    }
    const Matrix &t = schur.matrixT();
    const auto d = t.rows();
    double off = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            off = std::max(off, std::abs(t(i, j)));
        }
    }
    if (off > 1e-8) {
        throw NumericalError("Schur form of a unitary is not diagonal");
    }
    return {t.diagonal(), schur.matrixU()};
}

double wrap_phase(double x) {
    double y = std::remainder(x, 2.0 * kPi);
    if (y <= -kPi) {
        y += 2.0 * kPi;
    }
    return y;
}

}  // namespace

Operator principal_log_unitary(const Operator &u) {
    const UnitarySchur s = unitary_schur(u);
    const auto d = s.values.size();
    Vector logs(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double theta = std::arg(s.values(i));
        if (std::abs(theta) > kPi - 1e-9) {
            throw NumericalError("principal logarithm undefined: eigenphase at the branch cut");
        }
        logs(i) = cplx(0.0, theta);
    }
    return Operator(u.layout(), s.vectors * logs.asDiagonal() * s.vectors.adjoint());
}

EigenPhases eigphases_unitary(const Operator &u, double cluster_tol) {
    const UnitarySchur s = unitary_schur(u);
    const auto d = static_cast<std::size_t>(s.values.size());
    std::vector<double> phi(d);
    for (std::size_t i = 0; i < d; ++i) {
        phi[i] = wrap_phase(-std::arg(s.values(static_cast<Eigen::Index>(i))));
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return phi[a] < phi[b]; });

    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t i = order[k];
        if (!clusters.empty() && phi[i] - phi[clusters.back().back()] <= cluster_tol) {
            clusters.back().push_back(i);
        } else {
            clusters.push_back({i});
        }
    }
    // Merge across the -pi / +pi seam.
    if (clusters.size() > 1) {
        const double gap = phi[clusters.front().front()] + 2.0 * kPi - phi[clusters.back().back()];
        if (gap <= cluster_tol) {
            clusters.front().insert(clusters.front().end(), clusters.back().begin(), clusters.back().end());
            clusters.pop_back();
        }
    }

    EigenPhases out;
    for (const auto &members : clusters) {
        cplx mean = 0.0;
        Matrix basis(s.vectors.rows(), static_cast<Eigen::Index>(members.size()));
        for (std::size_t c = 0; c < members.size(); ++c) {
            mean += std::polar(1.0, phi[members[c]]);
            basis.col(static_cast<Eigen::Index>(c)) = s.vectors.col(static_cast<Eigen::Index>(members[c]));
        }
        out.phases.push_back(wrap_phase(std::arg(mean)));
        out.projectors.emplace_back(u.layout(), basis * basis.adjoint());
    }
    return out;
}

}  // namespace symprot
