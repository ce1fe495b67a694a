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
#include <numeric>

#include "symprot/rng.hpp"
#include "symprot/symmetry.hpp"

namespace symprot {

const char *to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::identity: return "identity";
        case ScheduleKind::haar_su2: return "haar_su2";
        case ScheduleKind::hadamard_det: return "hadamard_det";
        case ScheduleKind::u1_z: return "u1_z";
        case ScheduleKind::gauge: return "gauge";
        case ScheduleKind::term_ordering: return "term_ordering";
    }
    return "?";
}

const char *to_string(ScheduleMode mode) {
    switch (mode) {
        case ScheduleMode::independent: return "independent";
        case ScheduleMode::powers_of_c0: return "powers_of_c0";
        case ScheduleMode::uniform_angles: return "uniform_angles";
    }
    return "?";
}

const char *to_string(SymmetryGroup group) {
    switch (group) {
        case SymmetryGroup::none: return "none";
        case SymmetryGroup::su2_global: return "su2_global";
        case SymmetryGroup::u1_global: return "u1_global";
        case SymmetryGroup::z2l_gauge: return "z2l_gauge";
        case SymmetryGroup::u1_gauge: return "u1_gauge";
    }
    return "?";
}

Operator tensor_power(const Matrix &w, int n) {
    require(n >= 1, "tensor power needs n >= 1");
    Operator out(Layout({static_cast<std::size_t>(w.rows())}), w);
    const Operator single = out;
    for (int i = 1; i < n; ++i) {
        out = kron(out, single);
    }
    return out;
}

Matrix haar_su2_matrix(std::uint64_t seed) {
    Rng rng(seed);
    double q[4];
    double norm = 0.0;
    do {
        for (double &v : q) {
            v = rng.normal();
        }
        norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    } while (norm < 1e-12);
    const cplx alpha(q[0] / norm, q[1] / norm);
    const cplx beta(q[2] / norm, q[3] / norm);
    Matrix w(2, 2);
    w << alpha, -std::conj(beta), beta, std::conj(alpha);
    return w;
}

namespace {

Matrix z_rotation(double phi) {
    Matrix w = Matrix::Zero(2, 2);
    w(0, 0) = std::polar(1.0, -phi);
    w(1, 1) = std::polar(1.0, phi);
    return w;
}

constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

ProtectionSchedule ProtectionSchedule::identity(std::size_t r) {
    require(r >= 1, "schedule needs r >= 1");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::identity;
    s.mode_ = ScheduleMode::powers_of_c0;
    s.r_ = r;
    return s;
}

ProtectionSchedule ProtectionSchedule::haar_su2(int n, std::size_t r, std::uint64_t seed) {
    require(n >= 1 && r >= 1, "haar_su2 schedule needs n, r >= 1");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::haar_su2;
    s.group_ = SymmetryGroup::su2_global;
    s.r_ = r;
    s.seed_ = seed;
    s.n_ = n;
    return s;
}

ProtectionSchedule ProtectionSchedule::hadamard_det(int n, std::size_t r) {
    require(n >= 1 && r >= 1, "hadamard schedule needs n, r >= 1");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::hadamard_det;
    s.mode_ = ScheduleMode::powers_of_c0;
    s.group_ = SymmetryGroup::su2_global;
    s.r_ = r;
    s.n_ = n;
    return s;
}

ProtectionSchedule ProtectionSchedule::u1_z(int n, std::size_t r, std::uint64_t seed, ScheduleMode mode) {
    require(n >= 1 && r >= 1, "u1_z schedule needs n, r >= 1");
    require(mode == ScheduleMode::independent || mode == ScheduleMode::powers_of_c0,
            "u1_z schedule mode must be independent or powers_of_c0");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::u1_z;
    s.mode_ = mode;
    s.group_ = SymmetryGroup::u1_global;
    s.r_ = r;
    s.seed_ = seed;
    s.n_ = n;
    if (mode == ScheduleMode::powers_of_c0) {
        Rng rng(derive_seed(seed, "base"));
        s.base_angles_ = {rng.uniform(0.0, kTwoPi)};
    }
    return s;
}

ProtectionSchedule ProtectionSchedule::gauge(const HamiltonianModel &model, std::size_t r, SymmetryGroup group,
                                             ScheduleMode mode, std::uint64_t seed) {
    require(model.meta().schwinger.has_value(), "gauge schedule requires a Schwinger model");
    require(r >= 1, "schedule needs r >= 1");
    require(group == SymmetryGroup::z2l_gauge || group == SymmetryGroup::u1_gauge,
            "gauge schedule group must be Z_2Lambda or U(1)");
    require(mode == ScheduleMode::uniform_angles || mode == ScheduleMode::independent,
            "gauge schedule mode must be uniform_angles or independent");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::gauge;
    s.mode_ = mode;
    s.group_ = group;
    s.r_ = r;
    s.seed_ = seed;
    s.n_ = model.meta().schwinger->sites;
    s.cutoff_ = model.meta().schwinger->cutoff;

    auto data = std::make_shared<GaugeData>();
    data->dim = model.dim();
    int lo = 0, hi = 0;
    for (const auto &g : gauge_operators(model)) {
        std::vector<int> labels(g.dim());
        for (std::size_t b = 0; b < g.dim(); ++b) {
            labels[b] = static_cast<int>(std::lround(g[b]));
            lo = std::min(lo, labels[b]);
            hi = std::max(hi, labels[b]);
        }
        data->labels.push_back(std::move(labels));
    }
    data->min_label = lo;
    data->max_label = hi;
    s.gauge_ = std::move(data);

    if (mode == ScheduleMode::uniform_angles) {
        Rng rng(derive_seed(seed, "base"));
        for (int i = 0; i < s.n_; ++i) {
            if (group == SymmetryGroup::z2l_gauge) {
                s.base_steps_.push_back(static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(s.cutoff_))));
            } else {
                s.base_angles_.push_back(rng.uniform(0.0, kTwoPi));
            }
        }
    }
    return s;
}

ProtectionSchedule ProtectionSchedule::random_ordering(std::size_t num_terms, std::size_t r, std::uint64_t seed) {
    require(num_terms >= 1 && r >= 1, "ordering schedule needs terms and r >= 1");
    ProtectionSchedule s;
    s.kind_ = ScheduleKind::term_ordering;
    s.r_ = r;
    s.seed_ = seed;
    s.num_terms_ = num_terms;
    return s;
}

ProtectionSchedule ProtectionSchedule::with_steps(std::size_t r) const {
    require(r >= 1, "schedule needs r >= 1");
    ProtectionSchedule s = *this;
    s.r_ = r;
    return s;
}

bool ProtectionSchedule::is_powers_of_base() const {
    switch (kind_) {
        case ScheduleKind::identity:
        case ScheduleKind::hadamard_det: return true;
        case ScheduleKind::u1_z: return mode_ == ScheduleMode::powers_of_c0;
        case ScheduleKind::gauge: return mode_ == ScheduleMode::uniform_angles;
        default: return false;
    }
}

StepProtection ProtectionSchedule::step(std::size_t k) const {
    require(k >= 1 && k <= r_, "step index outside 1..r");
    StepProtection p;
    Rng rng(derive_seed(seed_, k));
    switch (kind_) {
        case ScheduleKind::identity: break;
        case ScheduleKind::haar_su2:
            p.form = StepProtection::Form::global_product;
            p.single_qubit = haar_su2_matrix(derive_seed(seed_, k));
            break;
        case ScheduleKind::hadamard_det:
            if (k % 2 == 1) {
                p.form = StepProtection::Form::global_product;
                p.single_qubit = pauli::H();
            }
            break;
        case ScheduleKind::u1_z: {
            p.form = StepProtection::Form::global_product;
            const double phi = mode_ == ScheduleMode::powers_of_c0
                                   ? std::fmod(static_cast<double>(k) * base_angles_[0], kTwoPi)
                                   : rng.uniform(0.0, kTwoPi);
            p.single_qubit = z_rotation(phi);
            break;
        }
        case ScheduleKind::gauge: {
            p.form = StepProtection::Form::gauge_phases;
            const int levels = 2 * cutoff_;
            for (int i = 0; i < n_; ++i) {
                double phi;
                if (group_ == SymmetryGroup::z2l_gauge) {
                    const long m = mode_ == ScheduleMode::uniform_angles
                                       ? (static_cast<long>(k % static_cast<std::size_t>(levels)) * base_steps_[i]) % levels
                                       : static_cast<long>(rng.below(static_cast<std::uint64_t>(levels)));
                    phi = static_cast<double>(m) * kPi / cutoff_;
                } else {
                    phi = mode_ == ScheduleMode::uniform_angles
                              ? std::fmod(static_cast<double>(k) * base_angles_[i], kTwoPi)
                              : rng.uniform(0.0, kTwoPi);
                }
                p.gauge_angles.push_back(phi);
            }
            break;
        }
        case ScheduleKind::term_ordering: {
            p.form = StepProtection::Form::permutation;
            p.permutation.resize(num_terms_);
            std::iota(p.permutation.begin(), p.permutation.end(), 0);
            for (std::size_t i = num_terms_; i > 1; --i) {
                std::swap(p.permutation[i - 1], p.permutation[rng.below(i)]);
            }
            break;
        }
    }
    return p;
}

std::vector<cplx> ProtectionSchedule::gauge_phases(const std::vector<double> &angles) const {
    require(gauge_ != nullptr, "schedule has no gauge generators");
    require(angles.size() == gauge_->labels.size(), "one angle per gauge generator required");
    const int lo = gauge_->min_label;
    const int span = gauge_->max_label - lo + 1;
    std::vector<cplx> table(angles.size() * static_cast<std::size_t>(span));
    for (std::size_t i = 0; i < angles.size(); ++i) {
        for (int v = 0; v < span; ++v) {
            table[i * span + v] = std::polar(1.0, -angles[i] * (v + lo));
        }
    }
    std::vector<cplx> out(gauge_->dim, cplx(1.0));
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const cplx *row = table.data() + i * span;
        const std::vector<int> &labels = gauge_->labels[i];
        for (std::size_t b = 0; b < out.size(); ++b) {
            out[b] *= row[labels[b] - lo];
        }
    }
    return out;
}

std::optional<std::vector<cplx>> ProtectionSchedule::diagonal(std::size_t k, std::size_t dim) const {
    const StepProtection p = step(k);
    switch (p.form) {
        case StepProtection::Form::identity:
        case StepProtection::Form::permutation: return std::vector<cplx>(dim, cplx(1.0));
        case StepProtection::Form::gauge_phases:
            require(dim == gauge_->dim, "schedule dimension mismatch");
            return gauge_phases(p.gauge_angles);
        case StepProtection::Form::global_product: {
            const Matrix &w = p.single_qubit;
            if (std::abs(w(0, 1)) != 0.0 || std::abs(w(1, 0)) != 0.0) {
                return std::nullopt;
            }
            require(dim == (std::size_t{1} << n_), "schedule dimension mismatch");
            std::vector<cplx> out(dim);
            for (std::size_t b = 0; b < dim; ++b) {
                cplx v = 1.0;
                for (int q = 0; q < n_; ++q) {
                    v *= ((b >> q) & 1U) ? w(1, 1) : w(0, 0);
                }
                out[b] = v;
            }
            return out;
        }
    }
    return std::nullopt;
}

Operator ProtectionSchedule::materialize(std::size_t k, const Layout &layout) const {
    const StepProtection p = step(k);
    switch (p.form) {
        case StepProtection::Form::identity:
        case StepProtection::Form::permutation: return Operator::identity(layout);
        case StepProtection::Form::global_product: {
            require(layout.dim() == (std::size_t{1} << n_), "schedule dimension mismatch");
            return Operator(layout, tensor_power(p.single_qubit, n_).matrix());
        }
        case StepProtection::Form::gauge_phases:
            require(layout.dim() == gauge_->dim, "schedule dimension mismatch");
            return Operator::diagonal(layout, gauge_phases(p.gauge_angles));
    }
    return Operator::identity(layout);
}

std::vector<std::size_t> ProtectionSchedule::ordering(std::size_t k, std::size_t num_terms) const {
    if (kind_ == ScheduleKind::term_ordering) {
        require(num_terms == num_terms_, "ordering schedule built for a different term count");
        return step(k).permutation;
    }
    std::vector<std::size_t> order(num_terms);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

Operator ProtectionSchedule::base_unitary(const Layout &layout) const {
    require(is_powers_of_base(), "base unitary is defined for powers-of-base schedules only");
    if (kind_ == ScheduleKind::identity) {
        return Operator::identity(layout);
    }
    return materialize(1, layout);
}

nlohmann::json ProtectionSchedule::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    j["mode"] = to_string(mode_);
    j["group"] = to_string(group_);
    j["r"] = r_;
    j["seed"] = seed_;
    return j;
}

}  // namespace symprot
