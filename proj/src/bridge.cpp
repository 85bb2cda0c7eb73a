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

#include "cvcodes/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "cvcodes/errors.hpp"

namespace cvcodes {

namespace {

void require_order(int order) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "rotation order N must be >= 1, got " + std::to_string(order));
    }
}

void require_dim(int dim) {
    if (dim < 1) {
        throw Error(ErrorKind::InvalidDimension, "Fock dimension must be >= 1, got " + std::to_string(dim));
    }
}

/// The Fock level reached by a support point, if any. Indices carry a
/// sqrt(pi)^e factor; only index 0 is an integer momentum when e != 0.
std::optional<int> fock_level(const Rational &index, const SqrtPiScaled &unit, int dim) {
    if (unit.sqrt_pi_exp != 0 && index != Rational(0)) {
        return std::nullopt;
    }
    if (!is_integer(index)) {
        return std::nullopt;
    }
    const std::int64_t v = index.numerator();
    if (v < 0 || v >= dim) {
        return std::nullopt;
    }
    return static_cast<int>(v);
}

UpsilonResult finish(ComplexVector amps, double dropped, bool normalize) {
    const bool zero = amps.squaredNorm() == 0.0;
    if (normalize && !zero) {
        amps /= amps.norm();
        return {FockVector(std::move(amps), true), dropped, false};
    }
    return {FockVector(std::move(amps)), dropped, zero};
}

FockOperator zero_operator(int dim, Structure structure) {
    return FockOperator(ComplexMatrix::Zero(dim, dim), structure);
}

FockOperator comb_diagonal_image(GkpGate::Kind kind, int order, int dim) {
    // Omega reflects the momentum: the Fock phase at m is the comb phase at -m.
    ExactDiagonal exact{ExactDiagonal::Unit::pi_phase, {}};
    for (int m = 0; m < dim; ++m) {
        exact.values.push_back(gkp_gate_phase(GkpGate::of(kind), Rational(-m), order));
    }
    return FockOperator(std::move(exact));
}

FockOperator hadamard_image(int order, int dim) {
    const double prefactor = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    ComplexMatrix h(dim, dim);
    const Rational n2(static_cast<std::int64_t>(order) * order);
    for (int m = 0; m < dim; ++m) {
        for (int mp = 0; mp < dim; ++mp) {
            h(m, mp) = prefactor * pi_phase_to_complex(reduce_mod2(Rational(-m * mp) / n2));
        }
    }
    return FockOperator(std::move(h), Structure::dense());
}

double diagonal_phase_gap(const ExactDiagonal &a, const ExactDiagonal &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        Rational d = reduce_mod2(a.values[i] - b.values[i]);
        if (d > Rational(1)) {
            d = Rational(2) - d;
        }
        worst = std::max(worst, to_double(d));
    }
    return worst;
}

}  // namespace

BridgeMap BridgeMap::make(int order, int dim) {
    require_order(order);
    require_dim(dim);
    return {order, dim, -1};
}

UpsilonResult upsilon_apply(const CombState &state, int dim, bool normalize) {
    require_dim(dim);
    ComplexVector amps = ComplexVector::Zero(dim);
    if (state.kind() == CombState::Kind::finite) {
        double dropped = 0.0;
        for (const auto &e : state.entries()) {
            const double mag = to_double(e.magnitude);
            if (const auto level = fock_level(e.index, state.unit(), dim)) {
                amps(*level) = mag * pi_phase_to_complex(e.phase);
            } else {
                dropped += mag * mag;
            }
        }
        return finish(std::move(amps), dropped, normalize);
    }

    // Periodic: offset + k P lands in [0, D) for finitely many k; the rest of
    // the infinite support is dropped.
    const double mag = to_double(state.magnitude());
    const Rational &offset = state.offset();
    if (state.unit().sqrt_pi_exp == 0 && is_integer(offset)) {
        const std::int64_t base = offset.numerator();
        for (std::int64_t k = 0; base + k * state.period() < dim; ++k) {
            amps(base + k * state.period()) = mag * pi_phase_to_complex(state.phase_at_label(k));
        }
    } else if (offset == Rational(0)) {
        amps(0) = mag * pi_phase_to_complex(state.phase_at_label(0));
    }
    return finish(std::move(amps), std::numeric_limits<double>::infinity(), normalize);
}

UpsilonResult upsilon_apply(const SampledComb &state, int dim, bool normalize) {
    require_dim(dim);
    ComplexVector amps = ComplexVector::Zero(dim);
    double dropped = 0.0;
    for (const auto &e : state.entries) {
        if (const auto level = fock_level(e.index, state.unit, dim)) {
            amps(*level) += e.amplitude;
        } else {
            dropped += std::norm(e.amplitude);
        }
    }
    return finish(std::move(amps), dropped, normalize);
}

SampledComb upsilon_embed(const FockVector &state, int order) {
    SampledComb out{gkp_unit(order), {}};
    for (int m = 0; m < state.dim(); ++m) {
        out.entries.push_back({Rational(m), state[m]});
    }
    return out;
}

OmegaResult omega_map_translation(TranslationKind kind, const SqrtPiScaled &amount, int order, int dim) {
    require_order(order);
    require_dim(dim);
    if (kind == TranslationKind::q) {
        if (amount.coeff != Rational(0) && amount.sqrt_pi_exp != 2) {
            throw Error(ErrorKind::NonRationalPhase,
                        "q translation amount must be a rational multiple of pi to give exact phases");
        }
        ExactDiagonal exact{ExactDiagonal::Unit::pi_phase, {}};
        for (int m = 0; m < dim; ++m) {
            exact.values.push_back(amount.coeff * m);
        }
        return {FockOperator(std::move(exact)), false};
    }

    // A momentum translation by zeta != 0 carrying a sqrt(pi) factor moves
    // integer support off the integers, exactly like a fractional zeta.
    const bool integral = amount.coeff == Rational(0) || (amount.sqrt_pi_exp == 0 && is_integer(amount.coeff));
    if (!integral) {
        return {zero_operator(dim, Structure::dense()), true};
    }
    const std::int64_t zeta = amount.coeff.numerator();
    if (zeta == 0) {
        return {FockOperator(ComplexMatrix::Identity(dim, dim), Structure::diagonal()), false};
    }
    const std::int64_t shift = zeta > 0 ? zeta : -zeta;
    if (shift >= dim) {
        return {zero_operator(dim, zeta > 0 ? Structure::upper(1) : Structure::lower(1)), true};
    }
    FockOperator gamma = number_shift_op(static_cast<int>(shift), dim);
    return {zeta > 0 ? gamma : gamma.adjoint(), false};
}

const FockOperator &LogicalSet::get(LogicalGate gate) const {
    switch (gate) {
        case LogicalGate::Z:
            return z;
        case LogicalGate::S:
            return s;
        case LogicalGate::T:
            return t;
        case LogicalGate::X:
            return x;
        case LogicalGate::H:
            return h;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown logical gate");
}

LogicalSet derive_logical_set(int order, int dim) {
    require_order(order);
    if (dim < 2 * order) {
        throw Error(ErrorKind::InvalidDimension,
                    "logical set needs D >= 2N, got D = " + std::to_string(dim) + ", N = " + std::to_string(order));
    }
    const Rational x_shift = gkp_gate_shift(GkpGate::of(GkpGate::Kind::X), order);
    return LogicalSet{
        comb_diagonal_image(GkpGate::Kind::Z, order, dim),
        comb_diagonal_image(GkpGate::Kind::S, order, dim),
        comb_diagonal_image(GkpGate::Kind::T, order, dim),
        omega_map_translation(TranslationKind::p, {x_shift, 0}, order, dim).op,
        hadamard_image(order, dim),
    };
}

std::vector<BridgeRow> bridge_table(int order, int dim) {
    const LogicalSet derived = derive_logical_set(order, dim);
    std::vector<BridgeRow> rows;
    for (LogicalGate gate : {LogicalGate::Z, LogicalGate::S, LogicalGate::T, LogicalGate::X, LogicalGate::H}) {
        const FockOperator reference = rot_logical_op(gate, order, dim);
        const FockOperator &ours = derived.get(gate);
        BridgeRow row{gate, false, 0.0};
        const auto &a = ours.exact_diagonal();
        const auto &b = reference.exact_diagonal();
        if (a && b && a->unit == b->unit) {
            row.max_phase_diff = diagonal_phase_gap(*a, *b);
            row.exact_match = a->values == b->values;
        } else {
            row.max_phase_diff = (ours.entries() - reference.entries()).cwiseAbs().maxCoeff();
            row.exact_match = ours.entries() == reference.entries();
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ErrorGenerator> map_error_generators(int order, int dim, int samples) {
    require_order(order);
    if (dim <= order) {
        throw Error(ErrorKind::InvalidDimension, "error generators need D > N");
    }
    if (samples < 0) {
        throw Error(ErrorKind::InvalidArgument, "sample count must be >= 0");
    }
    std::vector<ErrorGenerator> out;
    for (int l = 1; l < order; ++l) {
        out.push_back({"Gamma_" + std::to_string(l),
                       omega_map_translation(TranslationKind::p, {Rational(l), 0}, order, dim).op});
    }
    for (int l = 1; l < order; ++l) {
        out.push_back({"Gamma_" + std::to_string(l) + "^dag",
                       omega_map_translation(TranslationKind::p, {Rational(-l), 0}, order, dim).op});
    }
    for (int s = 1; s <= samples; ++s) {
        const Rational theta(s, static_cast<std::int64_t>(samples + 1) * order);
        out.push_back({"R(" + to_string(theta) + " pi)", rotation_op_pi(theta, dim)});
    }
    return out;
}

}  // namespace cvcodes
