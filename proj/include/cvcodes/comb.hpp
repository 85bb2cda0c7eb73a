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

#include <cstdint>
#include <functional>
#include <vector>

#include "cvcodes/rational.hpp"

// Momentum combs with exact support and exact phases.
//
// A comb index is the momentum eigenvalue divided by sqrt(pi)^e, where e is
// the exponent of the comb's unit. The unit itself records the lattice
// spacing sqrt(pi)/lambda; for the regime lambda = sqrt(pi)/N used
// throughout, the unit is {N, e = 0} and indices are plain momenta, so the
// codeword |j> sits on (2k + j) N. Phases are rationals in units of pi,
// reduced into [0, 2).

namespace cvcodes {

struct CombEntry {
    Rational index;
    Rational magnitude;
    Rational phase;

    friend bool operator==(const CombEntry &, const CombEntry &) = default;
};

class CombState {
   public:
    enum class Kind { finite, periodic };

    /// Entries are sorted by index; duplicates are rejected.
    static CombState finite(SqrtPiScaled unit, std::vector<CombEntry> entries);
    /// Support offset + k * period for every integer k; the phase at label k
    /// is pattern[k mod pattern.size()]. Stored in canonical form: offset in
    /// [0, period) and the shortest repeating pattern.
    static CombState periodic(SqrtPiScaled unit, Rational offset, std::int64_t period,
                              std::vector<Rational> pattern, Rational magnitude = Rational(1));

    Kind kind() const { return kind_; }
    const SqrtPiScaled &unit() const { return unit_; }

    const std::vector<CombEntry> &entries() const { return entries_; }

    const Rational &offset() const { return offset_; }
    std::int64_t period() const { return period_; }
    const std::vector<Rational> &pattern() const { return pattern_; }
    const Rational &magnitude() const { return magnitude_; }
    Rational phase_at_label(std::int64_t k) const;

    bool empty() const { return kind_ == Kind::finite && entries_.empty(); }

    friend bool operator==(const CombState &, const CombState &) = default;

   private:
    CombState() = default;

    Kind kind_ = Kind::finite;
    SqrtPiScaled unit_;
    std::vector<CombEntry> entries_;
    Rational offset_{0};
    std::int64_t period_ = 1;
    std::vector<Rational> pattern_;
    Rational magnitude_{1};
};

struct TwoModeEntry {
    Rational index1;
    Rational index2;
    Rational magnitude;
    Rational phase;

    friend bool operator==(const TwoModeEntry &, const TwoModeEntry &) = default;
};

class TwoModeComb {
   public:
    using Kind = CombState::Kind;

    static TwoModeComb finite(SqrtPiScaled unit1, SqrtPiScaled unit2, std::vector<TwoModeEntry> entries);
    /// Product lattice; phase at labels (k1, k2) is
    /// pattern[(k1 mod len1) * len2 + (k2 mod len2)].
    static TwoModeComb periodic(SqrtPiScaled unit1, SqrtPiScaled unit2, Rational offset1,
                                std::int64_t period1, Rational offset2, std::int64_t period2,
                                std::int64_t len1, std::int64_t len2, std::vector<Rational> pattern,
                                Rational magnitude = Rational(1));
    /// Both factors must be of the same kind.
    static TwoModeComb tensor(const CombState &a, const CombState &b);

    Kind kind() const { return kind_; }
    const SqrtPiScaled &unit1() const { return unit1_; }
    const SqrtPiScaled &unit2() const { return unit2_; }
    const std::vector<TwoModeEntry> &entries() const { return entries_; }

    const Rational &offset1() const { return offset1_; }
    const Rational &offset2() const { return offset2_; }
    std::int64_t period1() const { return period1_; }
    std::int64_t period2() const { return period2_; }
    std::int64_t len1() const { return len1_; }
    std::int64_t len2() const { return len2_; }
    const std::vector<Rational> &pattern() const { return pattern_; }
    const Rational &magnitude() const { return magnitude_; }
    Rational phase_at_labels(std::int64_t k1, std::int64_t k2) const;

    friend bool operator==(const TwoModeComb &, const TwoModeComb &) = default;

   private:
    TwoModeComb() = default;

    Kind kind_ = Kind::finite;
    SqrtPiScaled unit1_;
    SqrtPiScaled unit2_;
    std::vector<TwoModeEntry> entries_;
    Rational offset1_{0};
    Rational offset2_{0};
    std::int64_t period1_ = 1;
    std::int64_t period2_ = 1;
    std::int64_t len1_ = 1;
    std::int64_t len2_ = 1;
    std::vector<Rational> pattern_;
    Rational magnitude_{1};
};

/// Unit for lambda = sqrt(pi)/N: spacing N, no sqrt(pi) factor.
SqrtPiScaled gkp_unit(int order);

struct CombRepresentation {
    enum class Kind { ideal, window };

    Kind kind = Kind::ideal;
    /// half-width W for `window`: labels k in [-W, W]
    int half_width = 0;

    static CombRepresentation ideal() { return {Kind::ideal, 0}; }
    static CombRepresentation window(int w) { return {Kind::window, w}; }
};

/// |j> ~ sum_k |(2k + j) N>_p with uniform magnitude 1 and zero phases.
CombState gkp_codeword(int order, int parity, CombRepresentation rep);

/// Finite comb with uniform magnitude on lo, lo + step, ..., <= hi.
CombState uniform_comb(SqrtPiScaled unit, const Rational &lo, const Rational &hi,
                       const Rational &step = Rational(1));

struct GkpGate {
    enum class Kind { Z, S, T, X, stab_q, stab_p, translate_q, translate_p };

    Kind kind = Kind::Z;
    /// translate_q: multiples of lambda sqrt(pi); translate_p: multiples of
    /// sqrt(pi)/lambda.
    Rational amount{0};

    static GkpGate of(Kind k) { return {k, Rational(0)}; }
    static GkpGate translate_q(const Rational &r) { return {Kind::translate_q, r}; }
    static GkpGate translate_p(const Rational &r) { return {Kind::translate_p, r}; }
};

/// Phase (units of pi) a diagonal gate imprints on momentum index v;
/// zero for the pure translations in p.
Rational gkp_gate_phase(const GkpGate &gate, const Rational &index, int order);
/// Momentum index shift produced by the gate; zero for diagonal gates.
Rational gkp_gate_shift(const GkpGate &gate, int order);

/// Throws UnitMismatch unless the state is in the lambda = sqrt(pi)/N regime.
CombState gkp_apply(const GkpGate &gate, const CombState &state, int order);

/// CZ = exp(-i lambda lambda' p (x) p) with lambda = sqrt(pi)/N and
/// lambda' = sqrt(pi)/M: phase -v v' / (N M) on index pair (v, v').
TwoModeComb gkp_apply_cz(const TwoModeComb &state, int order1, int order2);

/// Position translation by an absolute amount eta = c sqrt(pi)^e. The phase
/// -eta p is a rational multiple of pi only when e + (unit exponent) == 2;
/// otherwise NonRationalPhase.
CombState translate_q_absolute(const CombState &state, const SqrtPiScaled &eta, int order);

/// Multiplies each support point by e^{i pi f(v)}. f must be a polynomial of
/// degree <= 4 in v (all gate phases are).
CombState apply_phase_function(const CombState &state, const std::function<Rational(const Rational &)> &f);

struct PhaseComparison {
    bool equal = false;
    /// Constant phase difference s1 - s2 (units of pi) when equal.
    Rational global_phase{0};
};

PhaseComparison comb_equal_up_to_phase(const CombState &s1, const CombState &s2);
PhaseComparison comb_equal_up_to_phase(const TwoModeComb &s1, const TwoModeComb &s2);

/// Keeps the support indices in (2Z + j) N. ZeroProjection if none remain.
CombState trans_projector_apply(const CombState &state, int parity, int order);

/// Support contains some kN with k even and some with k odd.
bool trans_primitive_validity(const CombState &state, int order);

}  // namespace cvcodes
