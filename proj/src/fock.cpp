// Copyright 2026 The cvcodes Authors
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

#include "cvcodes/fock.hpp"

#include <cmath>
#include <numbers>

#include "cvcodes/errors.hpp"
#include "cvcodes/kernels.hpp"

namespace cvcodes {

namespace {

void require_dim(int dim) {
    if (dim < 1) {
        throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1, got " + std::to_string(dim));
    }
}

void require_order(int order) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "order N must be >= 1, got " + std::to_string(order));
    }
}

void require_parity(int parity) {
    if (parity != 0 && parity != 1) {
        throw Error(ErrorKind::InvalidArgument, "codeword label must be 0 or 1");
    }
}

bool fits_structure(const ComplexMatrix &m, const Structure &s) {
    if (s.kind == Structure::Kind::dense) {
        return true;
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) == std::complex<double>(0.0, 0.0)) {
                continue;
            }
            const bool allowed = (s.kind == Structure::Kind::diagonal && r == c) ||
                                 (s.kind == Structure::Kind::upper_shift && c == r + s.shift) ||
                                 (s.kind == Structure::Kind::lower_shift && r == c + s.shift);
            if (!allowed) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix materialize(const ExactDiagonal &exact) {
    const auto dim = static_cast<Eigen::Index>(exact.values.size());
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Rational &v = exact.values[static_cast<std::size_t>(i)];
        m(i, i) = exact.unit == ExactDiagonal::Unit::plain ? std::complex<double>(to_double(v), 0.0)
                                                           : pi_phase_to_complex(v);
    }
    return m;
}

Structure product_structure(const Structure &a, const Structure &b, int dim) {
    using K = Structure::Kind;
    if (a.kind == K::diagonal) {
        return b;
    }
    if (b.kind == K::diagonal) {
        return a;
    }
    if (a.kind == b.kind && (a.kind == K::upper_shift || a.kind == K::lower_shift) &&
        a.shift + b.shift < dim) {
        return {a.kind, a.shift + b.shift};
    }
    return Structure::dense();
}

}  // namespace

FockVector::FockVector(ComplexVector amplitudes, bool normalized)
    : amplitudes_(std::move(amplitudes)), normalized_(normalized) {
    if (amplitudes_.size() < 1) {
        throw Error(ErrorKind::InvalidDimension, "FockVector needs at least one amplitude");
    }
    if (normalized_) {
        const double n2 = amplitudes_.squaredNorm();
        if (std::abs(n2 - 1.0) > 1e-12) {
            throw Error(ErrorKind::InvalidArgument,
                        "vector flagged normalized has squared norm " + std::to_string(n2));
        }
    }
}

FockVector FockVector::basis(int dim, int level) {
    require_dim(dim);
    if (level < 0 || level >= dim) {
        throw Error(ErrorKind::InvalidDimension, "level outside truncation");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(level) = 1.0;
    return FockVector(std::move(v), true);
}

FockVector FockVector::superposition(int dim, std::span<const int> levels) {
    require_dim(dim);
    ComplexVector v = ComplexVector::Zero(dim);
    for (int level : levels) {
        if (level < 0 || level >= dim) {
            throw Error(ErrorKind::InvalidDimension,
                        "level " + std::to_string(level) + " outside truncation " + std::to_string(dim));
        }
        v(level) += 1.0;
    }
    return FockVector(std::move(v)).normalized();
}

FockVector FockVector::coherent(int dim, std::complex<double> alpha) {
    require_dim(dim);
    ComplexVector v(dim);
    // alpha^m / sqrt(m!) by recurrence
    std::complex<double> term = 1.0;
    for (int m = 0; m < dim; ++m) {
        if (m > 0) {
            term *= alpha / std::sqrt(static_cast<double>(m));
        }
        v(m) = term;
    }
    return FockVector(std::move(v)).normalized();
}

FockVector FockVector::normalized() const {
    const double n = norm();
    if (n < 1e-12) {
        throw Error(ErrorKind::ZeroProjection, "cannot normalize a vector of norm " + std::to_string(n));
    }
    ComplexVector v = amplitudes_ / n;
    // Renormalize once more so the squared norm is within rounding of one.
    v /= v.norm();
    return FockVector(std::move(v), true);
}

std::string to_string(const Structure &s) {
    switch (s.kind) {
        case Structure::Kind::diagonal:
            return "diagonal";
        case Structure::Kind::lower_shift:
            return "lower_shift(" + std::to_string(s.shift) + ")";
        case Structure::Kind::upper_shift:
            return "upper_shift(" + std::to_string(s.shift) + ")";
        case Structure::Kind::dense:
            return "dense";
    }
    return "dense";
}

FockOperator::FockOperator(ComplexMatrix entries, Structure structure)
    : entries_(std::move(entries)), structure_(structure) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw Error(ErrorKind::InvalidDimension, "operator matrix must be square and non-empty");
    }
    if (!fits_structure(entries_, structure_)) {
        throw Error(ErrorKind::InvalidArgument,
                    "entries do not match structure tag " + to_string(structure_));
    }
}

FockOperator::FockOperator(ExactDiagonal exact)
    : entries_(materialize(exact)), structure_(Structure::diagonal()) {
    if (exact.values.empty()) {
        throw Error(ErrorKind::InvalidDimension, "exact diagonal must be non-empty");
    }
    if (exact.unit == ExactDiagonal::Unit::pi_phase) {
        for (auto &v : exact.values) {
            v = reduce_mod2(v);
        }
    }
    exact_ = std::move(exact);
}

FockVector FockOperator::apply(const FockVector &v) const {
    if (v.dim() != dim()) {
        throw Error(ErrorKind::InvalidDimension, "operator/vector dimension mismatch");
    }
    if (structure_.kind == Structure::Kind::diagonal) {
        return FockVector(entries_.diagonal().cwiseProduct(v.amplitudes()));
    }
    return FockVector(kernels::parallel::matvec(entries_, v.amplitudes()));
}

FockOperator FockOperator::adjoint() const {
    if (exact_) {
        ExactDiagonal adj = *exact_;
        if (adj.unit == ExactDiagonal::Unit::pi_phase) {
            for (auto &v : adj.values) {
                v = -v;
            }
        }
        return FockOperator(std::move(adj));
    }
    Structure s = structure_;
    if (s.kind == Structure::Kind::upper_shift) {
        s.kind = Structure::Kind::lower_shift;
    } else if (s.kind == Structure::Kind::lower_shift) {
        s.kind = Structure::Kind::upper_shift;
    }
    return FockOperator(entries_.adjoint(), s);
}

FockOperator FockOperator::compose(const FockOperator &rhs) const {
    if (rhs.dim() != dim()) {
        throw Error(ErrorKind::InvalidDimension, "operator dimension mismatch in compose");
    }
    if (exact_ && rhs.exact_ && exact_->unit == rhs.exact_->unit) {
        ExactDiagonal out{exact_->unit, {}};
        out.values.reserve(exact_->values.size());
        for (std::size_t i = 0; i < exact_->values.size(); ++i) {
            out.values.push_back(out.unit == ExactDiagonal::Unit::plain
                                     ? exact_->values[i] * rhs.exact_->values[i]
                                     : exact_->values[i] + rhs.exact_->values[i]);
        }
        return FockOperator(std::move(out));
    }
    return FockOperator(kernels::parallel::matmul(entries_, rhs.entries_),
                        product_structure(structure_, rhs.structure_, dim()));
}

FockOperator FockOperator::power(int exponent) const {
    if (exponent < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative operator power");
    }
    if (exponent == 0) {
        const auto unit = exact_ ? exact_->unit : ExactDiagonal::Unit::plain;
        const Rational one = unit == ExactDiagonal::Unit::plain ? Rational(1) : Rational(0);
        return FockOperator(ExactDiagonal{unit, std::vector<Rational>(static_cast<std::size_t>(dim()), one)});
    }
    FockOperator out = *this;
    for (int i = 1; i < exponent; ++i) {
        out = out.compose(*this);
    }
    return out;
}

bool FockOperator::is_unitary(double tol) const {
    const ComplexMatrix gram = kernels::parallel::matmul(entries_.adjoint(), entries_);
    return kernels::parallel::max_abs_diff(gram, ComplexMatrix::Identity(dim(), dim())) <= tol;
}

TwoModeOperator::TwoModeOperator(int dim1, int dim2, ComplexMatrix entries,
                                 std::optional<std::vector<Rational>> exact_phases)
    : dim1_(dim1), dim2_(dim2), entries_(std::move(entries)), exact_phases_(std::move(exact_phases)) {
    require_dim(dim1_);
    require_dim(dim2_);
    const Eigen::Index n = static_cast<Eigen::Index>(dim1_) * dim2_;
    if (entries_.rows() != n || entries_.cols() != n) {
        throw Error(ErrorKind::InvalidDimension, "two-mode matrix must be (D1*D2) x (D1*D2)");
    }
    if (exact_phases_ && static_cast<Eigen::Index>(exact_phases_->size()) != n) {
        throw Error(ErrorKind::InvalidDimension, "exact phase table has wrong length");
    }
}

Rational TwoModeOperator::phase_at(int m, int m2) const {
    if (!exact_phases_) {
        throw Error(ErrorKind::InvalidArgument, "operator carries no exact phases");
    }
    if (m < 0 || m >= dim1_ || m2 < 0 || m2 >= dim2_) {
        throw Error(ErrorKind::InvalidDimension, "level outside truncation");
    }
    return (*exact_phases_)[static_cast<std::size_t>(m) * dim2_ + m2];
}

ComplexVector TwoModeOperator::apply_product(const FockVector &a, const FockVector &b) const {
    if (a.dim() != dim1_ || b.dim() != dim2_) {
        throw Error(ErrorKind::InvalidDimension, "product state does not match operator dims");
    }
    return kernels::parallel::matvec(entries_, kron(a, b));
}

ComplexVector kron(const FockVector &a, const FockVector &b) {
    ComplexVector out(static_cast<Eigen::Index>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int k = 0; k < b.dim(); ++k) {
            out(static_cast<Eigen::Index>(i) * b.dim() + k) = a[i] * b[k];
        }
    }
    return out;
}

FockOperator fock_operator(const OperatorSpec &spec, int dim) {
    switch (spec.kind) {
        case OperatorKind::number:
            return number_op(dim);
        case OperatorKind::annihilation:
            return annihilation_op(dim);
        case OperatorKind::rotation:
            return rotation_op(spec.theta, dim);
        case OperatorKind::number_shift:
            return number_shift_op(spec.shift, dim);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown operator kind");
}

FockOperator number_op(int dim) {
    require_dim(dim);
    ExactDiagonal exact{ExactDiagonal::Unit::plain, {}};
    for (int m = 0; m < dim; ++m) {
        exact.values.emplace_back(m);
    }
    return FockOperator(std::move(exact));
}

FockOperator annihilation_op(int dim) {
    require_dim(dim);
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int l = 1; l < dim; ++l) {
        a(l - 1, l) = std::sqrt(static_cast<double>(l));
    }
    return FockOperator(std::move(a), dim > 1 ? Structure::upper(1) : Structure::diagonal());
}

FockOperator rotation_op(double theta, int dim) {
    require_dim(dim);
    ComplexMatrix r = ComplexMatrix::Zero(dim, dim);
    for (int m = 0; m < dim; ++m) {
        r(m, m) = std::polar(1.0, theta * m);
    }
    return FockOperator(std::move(r), Structure::diagonal());
}

FockOperator rotation_op_pi(const Rational &angle_over_pi, int dim) {
    require_dim(dim);
    ExactDiagonal exact{ExactDiagonal::Unit::pi_phase, {}};
    for (int m = 0; m < dim; ++m) {
        exact.values.push_back(angle_over_pi * m);
    }
    return FockOperator(std::move(exact));
}

FockOperator number_shift_op(int shift, int dim) {
    require_dim(dim);
    if (shift < 1 || shift >= dim) {
        throw Error(ErrorKind::InvalidDimension,
                    "number shift " + std::to_string(shift) + " needs 1 <= m < D = " + std::to_string(dim));
    }
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    for (int l = 0; l + shift < dim; ++l) {
        g(l, l + shift) = 1.0;
    }
    return FockOperator(std::move(g), Structure::upper(shift));
}

ProjectorResult u_invariant_projector(std::span<const Rational> generator_spectrum,
                                      const Rational &z_angle_over_pi, int parity) {
    require_parity(parity);
    if (generator_spectrum.empty()) {
        throw Error(ErrorKind::InvalidDimension, "empty generator spectrum");
    }
    if (z_angle_over_pi == Rational(0)) {
        throw Error(ErrorKind::InvalidArgument, "logical-Z angle must be nonzero");
    }
    ExactDiagonal exact{ExactDiagonal::Unit::plain, {}};
    std::vector<int> selected;
    for (std::size_t m = 0; m < generator_spectrum.size(); ++m) {
        // mu = (2k + j) / sigma  <=>  mu * sigma - j is an even integer
        const Rational scaled = generator_spectrum[m] * z_angle_over_pi - Rational(parity);
        const bool keep = is_integer(scaled) && scaled.numerator() % 2 == 0;
        exact.values.emplace_back(keep ? 1 : 0);
        if (keep) {
            selected.push_back(static_cast<int>(m));
        }
    }
    const bool empty = selected.empty();
    return ProjectorResult{FockOperator(std::move(exact)), std::move(selected), empty};
}

FockVector rot_codeword_from_primitive(const FockVector &primitive, int order, int parity) {
    require_order(order);
    require_parity(parity);
    const int dim = primitive.dim();
    if (dim < 2 * order) {
        throw Error(ErrorKind::InvalidDimension, "truncation must satisfy D >= 2N");
    }
    const ComplexVector &amps = primitive.amplitudes();

    ComplexVector summed = kernels::parallel::rotation_projector_apply(amps, order, parity);
    summed /= static_cast<double>(2 * order);

    ComplexVector selected = ComplexVector::Zero(dim);
    for (int l = 0; l < dim; ++l) {
        if (l % (2 * order) == parity * order) {
            selected(l) = amps(l);
        }
    }
    const double disagreement = (summed - selected).cwiseAbs().maxCoeff();
    if (disagreement > 1e-12) {
        throw std::logic_error("projector-sum and index-selection codewords disagree by " +
                               std::to_string(disagreement));
    }
    if (selected.norm() < 1e-12) {
        throw Error(ErrorKind::ZeroProjection, "primitive has no support on the j = " +
                                                   std::to_string(parity) + " sector");
    }
    return FockVector(std::move(selected)).normalized();
}

bool rot_primitive_validity(const FockVector &primitive, int order) {
    require_order(order);
    bool even = false;
    bool odd = false;
    for (int k = 0; k * order < primitive.dim(); ++k) {
        if (std::abs(primitive[k * order]) > 1e-12) {
            (k % 2 == 0 ? even : odd) = true;
        }
    }
    return even && odd;
}

const char *to_string(LogicalGate gate) {
    switch (gate) {
        case LogicalGate::Z:
            return "Z";
        case LogicalGate::S:
            return "S";
        case LogicalGate::T:
            return "T";
        case LogicalGate::X:
            return "X";
        case LogicalGate::H:
            return "H";
    }
    return "?";
}

FockOperator rot_logical_op(LogicalGate gate, int order, int dim) {
    require_order(order);
    require_dim(dim);
    const std::int64_t n = order;
    auto diagonal = [&](auto phase_of) {
        ExactDiagonal exact{ExactDiagonal::Unit::pi_phase, {}};
        for (std::int64_t m = 0; m < dim; ++m) {
            exact.values.push_back(phase_of(m));
        }
        return FockOperator(std::move(exact));
    };
    switch (gate) {
        case LogicalGate::Z:
            return diagonal([&](std::int64_t m) { return Rational(m, n); });
        case LogicalGate::S:
            return diagonal([&](std::int64_t m) { return Rational(m * m, 2 * n * n); });
        case LogicalGate::T:
            return diagonal([&](std::int64_t m) { return Rational(m * m * m * m, 4 * n * n * n * n); });
        case LogicalGate::X:
            if (dim <= order) {
                throw Error(ErrorKind::InvalidDimension, "logical X needs D > N");
            }
            return number_shift_op(order, dim);
        case LogicalGate::H: {
            ComplexMatrix h(dim, dim);
            const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
            for (std::int64_t m = 0; m < dim; ++m) {
                for (std::int64_t m2 = 0; m2 < dim; ++m2) {
                    h(m, m2) = scale * pi_phase_to_complex(Rational(-m * m2, n * n));
                }
            }
            return FockOperator(std::move(h), Structure::dense());
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown logical gate");
}

TwoModeOperator crot(int order1, int order2, int dim1, int dim2) {
    require_order(order1);
    require_order(order2);
    require_dim(dim1);
    require_dim(dim2);
    const Eigen::Index total = static_cast<Eigen::Index>(dim1) * dim2;
    ComplexMatrix entries = ComplexMatrix::Zero(total, total);
    std::vector<Rational> phases;
    phases.reserve(static_cast<std::size_t>(total));
    for (std::int64_t m = 0; m < dim1; ++m) {
        for (std::int64_t m2 = 0; m2 < dim2; ++m2) {
            const Rational phase = reduce_mod2(Rational(m * m2, std::int64_t{order1} * order2));
            const Eigen::Index idx = static_cast<Eigen::Index>(m) * dim2 + m2;
            entries(idx, idx) = pi_phase_to_complex(phase);
            phases.push_back(phase);
        }
    }
    return TwoModeOperator(dim1, dim2, std::move(entries), std::move(phases));
}

FockVector approx_ideal_rot_codeword(int order, int parity, int dim, double eps) {
    require_order(order);
    require_parity(parity);
    require_dim(dim);
    if (dim <= parity * order) {
        throw Error(ErrorKind::InvalidDimension, "truncation must satisfy D > jN");
    }
    if (!(eps >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "envelope eps must be nonnegative");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    // The common factor e^{-eps j N} is dropped; it cancels on normalization.
    for (int k = 0; (2 * k + parity) * order < dim; ++k) {
        v((2 * k + parity) * order) = std::exp(-eps * 2.0 * k * order);
    }
    return FockVector(std::move(v)).normalized();
}

}  // namespace cvcodes
