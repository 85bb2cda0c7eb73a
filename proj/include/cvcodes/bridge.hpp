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

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cvcodes/comb.hpp"
#include "cvcodes/fock.hpp"
#include "cvcodes/rational.hpp"

// The bridge between momentum combs and Fock states.
//
// Upsilon keeps the comb support points whose momentum is an integer v in
// [0, D) and sends them to |v>. Operators travel through Omega, which in the
// lambda = -sqrt(pi)/N regime of the rotation codes reflects the momentum:
// a diagonal comb gate with phase f(v) becomes the Fock diagonal f(-m), and
// a momentum translation by +zeta becomes the lowering shift Gamma_zeta.

namespace cvcodes {

struct BridgeMap {
    int order = 1;
    int dim = 1;
    /// Sign of lambda relative to sqrt(pi)/N on the comb side used by Omega.
    int convention_sign = -1;

    /// InvalidArgument for order < 1, InvalidDimension for dim < 1.
    static BridgeMap make(int order, int dim);
};

/// A comb with floating-point amplitudes: exact support, inexact weights.
struct SampledEntry {
    Rational index;
    std::complex<double> amplitude;
};

struct SampledComb {
    SqrtPiScaled unit;
    std::vector<SampledEntry> entries;
};

struct UpsilonResult {
    FockVector state;
    /// Squared magnitude of the support that has no Fock image; infinite for
    /// periodic combs.
    double dropped_mass = 0.0;
    /// Nothing survived; `state` is the zero vector.
    bool zero = false;
};

/// Support with exact integer momentum v in [0, D) maps to |v>; everything
/// else is dropped. Normalizes the output only when asked and non-zero.
UpsilonResult upsilon_apply(const CombState &state, int dim, bool normalize = false);
UpsilonResult upsilon_apply(const SampledComb &state, int dim, bool normalize = false);

/// Upsilon^dagger: |m> goes to the comb point with momentum m.
SampledComb upsilon_embed(const FockVector &state, int order);

enum class TranslationKind { q, p };

struct OmegaResult {
    FockOperator op;
    /// The image is the zero operator (non-integer momentum translation, or
    /// a shift at least as large as the truncation).
    bool zero = false;
};

/// q: diagonal e^{i eta m}; eta must be a rational multiple of pi (exponent
/// 2), NonRationalPhase otherwise. p: zeta > 0 gives Gamma_zeta, zeta < 0
/// gives Gamma_|zeta|^dagger, zeta = 0 the identity; a non-integer zeta gives
/// the zero operator.
OmegaResult omega_map_translation(TranslationKind kind, const SqrtPiScaled &amount, int order, int dim);

struct LogicalSet {
    FockOperator z;
    FockOperator s;
    FockOperator t;
    FockOperator x;
    FockOperator h;

    const FockOperator &get(LogicalGate gate) const;
};

/// Images of the comb logical gates. Requires D >= 2N (InvalidDimension).
LogicalSet derive_logical_set(int order, int dim);

struct BridgeRow {
    LogicalGate gate = LogicalGate::Z;
    bool exact_match = false;
    /// Largest phase difference in units of pi (diagonal gates) or largest
    /// entry difference (the others).
    double max_phase_diff = 0.0;
};

/// Compares derive_logical_set against rot_logical_op for Z, S, T, X and H.
std::vector<BridgeRow> bridge_table(int order, int dim);

struct ErrorGenerator {
    std::string name;
    FockOperator op;
};

/// Gamma_l for l = 1..N-1, then their adjoints, then R_theta at
/// theta = s / (samples + 1) * pi / N for s = 1..samples. Requires D > N.
std::vector<ErrorGenerator> map_error_generators(int order, int dim, int samples = 8);

}  // namespace cvcodes
