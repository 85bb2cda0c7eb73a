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

#include "cvcodes/comb.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cvcodes/errors.hpp"

namespace cvcodes {

namespace {

__extension__ typedef __int128 i128;

// Periodic patterns longer than this are refused rather than materialized.
constexpr std::int64_t kMaxPatternLength = std::int64_t{1} << 20;
constexpr int kMaxDegree = 4;

std::int64_t floor_div(const Rational &a, std::int64_t period) {
    const i128 num = a.numerator();
    const i128 den = static_cast<i128>(a.denominator()) * period;
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return static_cast<std::int64_t>(q);
}

std::int64_t mod_index(std::int64_t k, std::int64_t len) {
    const std::int64_t r = k % len;
    return r < 0 ? r + len : r;
}

i128 mod_pos(i128 a, i128 m) {
    const i128 r = a % m;
    return r < 0 ? r + m : r;
}

i128 factorial(int r) {
    i128 f = 1;
    for (int i = 2; i <= r; ++i) {
        f *= i;
    }
    return f;
}

// C(n, r) mod m for n >= 0.
i128 binom_mod(i128 n, int r, i128 m) {
    const i128 fact = factorial(r);
    const i128 big = m * fact;
    i128 prod = 1 % big;
    for (int i = 0; i < r; ++i) {
        prod = mod_pos(prod * mod_pos(n - i, big), big);
    }
    return (prod / fact) % m;
}

// Forward differences of samples taken at 0, 1, 2, ...
std::vector<Rational> forward_differences(std::vector<Rational> values) {
    std::vector<Rational> out;
    while (!values.empty()) {
        out.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            values[i] = values[i + 1] - values[i];
        }
        values.pop_back();
    }
    return out;
}

std::int64_t common_denominator(const std::vector<Rational> &values, std::size_t skip_first) {
    std::int64_t den = 1;
    for (std::size_t i = skip_first; i < values.size(); ++i) {
        den = std::lcm(den, values[i].denominator());
    }
    return den;
}

// A phase g(k) (units of pi) that is a polynomial of degree <= 4 in the lattice
// label k, held in the Newton basis g(k) = sum_t c_t C(k, t). Everything is
// evaluated mod 2 without forming large powers.
struct NewtonPhase1 {
    std::array<Rational, kMaxDegree + 1> c{};

    static NewtonPhase1 sample(const std::function<Rational(std::int64_t)> &g) {
        std::vector<Rational> values;
        for (std::int64_t k = 0; k <= kMaxDegree + 1; ++k) {
            values.push_back(g(k));
        }
        const std::vector<Rational> diffs = forward_differences(values);
        if (diffs[kMaxDegree + 1] != Rational(0)) {
            throw std::logic_error("phase function has degree above 4");
        }
        NewtonPhase1 out;
        std::copy_n(diffs.begin(), kMaxDegree + 1, out.c.begin());
        return out;
    }

    Rational eval_mod2(std::int64_t k) const {
        const std::vector<Rational> cs(c.begin(), c.end());
        const std::int64_t den = common_denominator(cs, 0);
        const i128 m = i128{2} * den;
        i128 acc = 0;
        for (int t = 0; t <= kMaxDegree; ++t) {
            const i128 a = static_cast<i128>(c[t].numerator()) * (den / c[t].denominator());
            acc = mod_pos(acc + mod_pos(a, m) * binom_mod(k, t, m), m);
        }
        return reduce_mod2(Rational(static_cast<std::int64_t>(acc), den));
    }

    // Smallest L > 0 with g(k + L) = g(k) mod 2 for every integer k.
    std::int64_t period() const {
        const std::vector<Rational> cs(c.begin(), c.end());
        const std::int64_t den = common_denominator(cs, 1);
        const i128 m = i128{2} * den;
        const std::int64_t bound = 48 * den;  // 2 * 4! * den is always a period
        for (std::int64_t len : divisors(bound)) {
            bool ok = true;
            // Newton coefficients of g(k + L) - g(k) must all be even integers.
            for (int s = 0; s < kMaxDegree && ok; ++s) {
                i128 acc = 0;
                for (int t = s + 1; t <= kMaxDegree; ++t) {
                    const i128 a = static_cast<i128>(c[t].numerator()) * (den / c[t].denominator());
                    acc = mod_pos(acc + mod_pos(a, m) * binom_mod(len, t - s, m), m);
                }
                ok = acc == 0;
            }
            if (ok) {
                return len;
            }
        }
        throw std::logic_error("no phase period found");
    }
};

// Two-variable analogue: g(k1, k2) = sum c[s][t] C(k1, s) C(k2, t).
struct NewtonPhase2 {
    std::array<std::array<Rational, kMaxDegree + 1>, kMaxDegree + 1> c{};

    static NewtonPhase2 sample(const std::function<Rational(std::int64_t, std::int64_t)> &g) {
        constexpr int n = kMaxDegree + 2;
        std::array<std::array<Rational, n>, n> grid{};
        for (int a = 0; a < n; ++a) {
            std::vector<Rational> row;
            for (int b = 0; b < n; ++b) {
                row.push_back(g(a, b));
            }
            const std::vector<Rational> d = forward_differences(row);
            std::copy(d.begin(), d.end(), grid[a].begin());
        }
        NewtonPhase2 out;
        for (int t = 0; t < n; ++t) {
            std::vector<Rational> col;
            for (int a = 0; a < n; ++a) {
                col.push_back(grid[a][t]);
            }
            const std::vector<Rational> d = forward_differences(col);
            for (int s = 0; s < n; ++s) {
                if (s > kMaxDegree || t > kMaxDegree) {
                    if (d[s] != Rational(0)) {
                        throw std::logic_error("two-mode phase function has degree above 4");
                    }
                } else {
                    out.c[s][t] = d[s];
                }
            }
        }
        return out;
    }

    std::int64_t denominator(bool skip_constant_axis1, bool skip_constant_axis2) const {
        std::int64_t den = 1;
        for (int s = 0; s <= kMaxDegree; ++s) {
            for (int t = 0; t <= kMaxDegree; ++t) {
                if ((skip_constant_axis1 && s == 0) || (skip_constant_axis2 && t == 0)) {
                    continue;
                }
                den = std::lcm(den, c[s][t].denominator());
            }
        }
        return den;
    }

    Rational eval_mod2(std::int64_t k1, std::int64_t k2) const {
        const std::int64_t den = denominator(false, false);
        const i128 m = i128{2} * den;
        i128 acc = 0;
        for (int s = 0; s <= kMaxDegree; ++s) {
            const i128 b1 = binom_mod(k1, s, m);
            for (int t = 0; t <= kMaxDegree; ++t) {
                const i128 a = static_cast<i128>(c[s][t].numerator()) * (den / c[s][t].denominator());
                acc = mod_pos(acc + mod_pos(mod_pos(a, m) * b1, m) * binom_mod(k2, t, m), m);
            }
        }
        return reduce_mod2(Rational(static_cast<std::int64_t>(acc), den));
    }

    // Period along axis 1 (first == true) or axis 2.
    std::int64_t period(bool first) const {
        const std::int64_t den = denominator(first, !first);
        const i128 m = i128{2} * den;
        const std::int64_t bound = 48 * den;
        for (std::int64_t len : divisors(bound)) {
            bool ok = true;
            for (int shifted = 0; shifted < kMaxDegree && ok; ++shifted) {
                for (int other = 0; other <= kMaxDegree && ok; ++other) {
                    i128 acc = 0;
                    for (int deg = shifted + 1; deg <= kMaxDegree; ++deg) {
                        const Rational &coef = first ? c[deg][other] : c[other][deg];
                        const i128 a = static_cast<i128>(coef.numerator()) * (den / coef.denominator());
                        acc = mod_pos(acc + mod_pos(a, m) * binom_mod(len, deg - shifted, m), m);
                    }
                    ok = acc == 0;
                }
            }
            if (ok) {
                return len;
            }
        }
        throw std::logic_error("no phase period found");
    }
};

std::int64_t checked_length(std::int64_t len) {
    if (len > kMaxPatternLength) {
        throw Error(ErrorKind::InvalidArgument,
                    "phase pattern would need " + std::to_string(len) + " entries");
    }
    return len;
}

std::int64_t minimal_period(const std::vector<Rational> &pattern) {
    const auto len = static_cast<std::int64_t>(pattern.size());
    for (std::int64_t d : divisors(len)) {
        bool ok = true;
        for (std::int64_t i = d; i < len && ok; ++i) {
            ok = pattern[static_cast<std::size_t>(i)] == pattern[static_cast<std::size_t>(i % d)];
        }
        if (ok) {
            return d;
        }
    }
    return len;
}

void require_regime(const SqrtPiScaled &unit, int order) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "order N must be >= 1");
    }
    if (!(unit == gkp_unit(order))) {
        throw Error(ErrorKind::UnitMismatch,
                    "state unit is not the lambda = sqrt(pi)/" + std::to_string(order) + " regime");
    }
}

CombState shift_comb(const CombState &state, const Rational &shift) {
    if (state.kind() == CombState::Kind::finite) {
        std::vector<CombEntry> entries = state.entries();
        for (auto &e : entries) {
            e.index += shift;
        }
        return CombState::finite(state.unit(), std::move(entries));
    }
    return CombState::periodic(state.unit(), state.offset() + shift, state.period(), state.pattern(),
                               state.magnitude());
}

}  // namespace

CombState CombState::finite(SqrtPiScaled unit, std::vector<CombEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const CombEntry &a, const CombEntry &b) { return a.index < b.index; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].index == entries[i - 1].index) {
            throw Error(ErrorKind::InvalidArgument, "duplicate comb index " + to_string(entries[i].index));
        }
        if (entries[i].magnitude < Rational(0)) {
            throw Error(ErrorKind::InvalidArgument, "comb magnitudes must be nonnegative");
        }
        entries[i].phase = reduce_mod2(entries[i].phase);
    }
    CombState s;
    s.kind_ = Kind::finite;
    s.unit_ = unit;
    s.entries_ = std::move(entries);
    return s;
}

CombState CombState::periodic(SqrtPiScaled unit, Rational offset, std::int64_t period,
                              std::vector<Rational> pattern, Rational magnitude) {
    if (period < 1) {
        throw Error(ErrorKind::InvalidArgument, "comb period must be >= 1");
    }
    if (pattern.empty()) {
        throw Error(ErrorKind::InvalidArgument, "phase pattern must be non-empty");
    }
    if (magnitude < Rational(0)) {
        throw Error(ErrorKind::InvalidArgument, "comb magnitude must be nonnegative");
    }
    const auto len = static_cast<std::int64_t>(pattern.size());
    // Relabel so that the offset lands in [0, period).
    const std::int64_t q = floor_div(offset, period);
    offset -= Rational(q) * period;
    std::vector<Rational> rotated(pattern.size());
    for (std::int64_t k = 0; k < len; ++k) {
        rotated[static_cast<std::size_t>(k)] = reduce_mod2(pattern[static_cast<std::size_t>(mod_index(k - q, len))]);
    }
    rotated.resize(static_cast<std::size_t>(minimal_period(rotated)));

    CombState s;
    s.kind_ = Kind::periodic;
    s.unit_ = unit;
    s.offset_ = offset;
    s.period_ = period;
    s.pattern_ = std::move(rotated);
    s.magnitude_ = magnitude;
    return s;
}

Rational CombState::phase_at_label(std::int64_t k) const {
    if (kind_ != Kind::periodic) {
        throw Error(ErrorKind::InvalidArgument, "phase_at_label needs a periodic comb");
    }
    return pattern_[static_cast<std::size_t>(mod_index(k, static_cast<std::int64_t>(pattern_.size())))];
}

TwoModeComb TwoModeComb::finite(SqrtPiScaled unit1, SqrtPiScaled unit2, std::vector<TwoModeEntry> entries) {
    auto key_less = [](const TwoModeEntry &a, const TwoModeEntry &b) {
        return a.index1 < b.index1 || (a.index1 == b.index1 && a.index2 < b.index2);
    };
    std::sort(entries.begin(), entries.end(), key_less);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].index1 == entries[i - 1].index1 && entries[i].index2 == entries[i - 1].index2) {
            throw Error(ErrorKind::InvalidArgument, "duplicate two-mode comb index pair");
        }
        if (entries[i].magnitude < Rational(0)) {
            throw Error(ErrorKind::InvalidArgument, "comb magnitudes must be nonnegative");
        }
        entries[i].phase = reduce_mod2(entries[i].phase);
    }
    TwoModeComb s;
    s.kind_ = Kind::finite;
    s.unit1_ = unit1;
    s.unit2_ = unit2;
    s.entries_ = std::move(entries);
    return s;
}

TwoModeComb TwoModeComb::periodic(SqrtPiScaled unit1, SqrtPiScaled unit2, Rational offset1,
                                  std::int64_t period1, Rational offset2, std::int64_t period2,
                                  std::int64_t len1, std::int64_t len2, std::vector<Rational> pattern,
                                  Rational magnitude) {
    if (period1 < 1 || period2 < 1 || len1 < 1 || len2 < 1) {
        throw Error(ErrorKind::InvalidArgument, "two-mode comb periods and pattern lengths must be >= 1");
    }
    if (static_cast<std::int64_t>(pattern.size()) != len1 * len2) {
        throw Error(ErrorKind::InvalidArgument, "two-mode pattern size must be len1 * len2");
    }
    if (magnitude < Rational(0)) {
        throw Error(ErrorKind::InvalidArgument, "comb magnitude must be nonnegative");
    }
    const std::int64_t q1 = floor_div(offset1, period1);
    const std::int64_t q2 = floor_div(offset2, period2);
    offset1 -= Rational(q1) * period1;
    offset2 -= Rational(q2) * period2;
    auto at = [&](std::int64_t a, std::int64_t b) -> const Rational & {
        return pattern[static_cast<std::size_t>(mod_index(a, len1) * len2 + mod_index(b, len2))];
    };
    // Shortest lengths along each axis.
    auto axis_ok = [&](std::int64_t d, bool first) {
        for (std::int64_t a = 0; a < len1; ++a) {
            for (std::int64_t b = 0; b < len2; ++b) {
                if (first ? !(reduce_mod2(at(a, b)) == reduce_mod2(at(a % d, b)))
                          : !(reduce_mod2(at(a, b)) == reduce_mod2(at(a, b % d)))) {
                    return false;
                }
            }
        }
        return true;
    };
    std::int64_t new1 = len1;
    for (std::int64_t d : divisors(len1)) {
        if (axis_ok(d, true)) {
            new1 = d;
            break;
        }
    }
    std::int64_t new2 = len2;
    for (std::int64_t d : divisors(len2)) {
        if (axis_ok(d, false)) {
            new2 = d;
            break;
        }
    }
    std::vector<Rational> canon(static_cast<std::size_t>(new1 * new2));
    for (std::int64_t a = 0; a < new1; ++a) {
        for (std::int64_t b = 0; b < new2; ++b) {
            canon[static_cast<std::size_t>(a * new2 + b)] = reduce_mod2(at(a - q1, b - q2));
        }
    }
    TwoModeComb s;
    s.kind_ = Kind::periodic;
    s.unit1_ = unit1;
    s.unit2_ = unit2;
    s.offset1_ = offset1;
    s.offset2_ = offset2;
    s.period1_ = period1;
    s.period2_ = period2;
    s.len1_ = new1;
    s.len2_ = new2;
    s.pattern_ = std::move(canon);
    s.magnitude_ = magnitude;
    return s;
}

TwoModeComb TwoModeComb::tensor(const CombState &a, const CombState &b) {
    if (a.kind() != b.kind()) {
        throw Error(ErrorKind::InvalidArgument, "tensor product needs two combs of the same kind");
    }
    if (a.kind() == Kind::finite) {
        std::vector<TwoModeEntry> entries;
        entries.reserve(a.entries().size() * b.entries().size());
        for (const auto &x : a.entries()) {
            for (const auto &y : b.entries()) {
                entries.push_back({x.index, y.index, x.magnitude * y.magnitude, x.phase + y.phase});
            }
        }
        return finite(a.unit(), b.unit(), std::move(entries));
    }
    const auto len1 = static_cast<std::int64_t>(a.pattern().size());
    const auto len2 = static_cast<std::int64_t>(b.pattern().size());
    std::vector<Rational> pattern;
    pattern.reserve(static_cast<std::size_t>(len1 * len2));
    for (const auto &p1 : a.pattern()) {
        for (const auto &p2 : b.pattern()) {
            pattern.push_back(p1 + p2);
        }
    }
    return periodic(a.unit(), b.unit(), a.offset(), a.period(), b.offset(), b.period(), len1, len2,
                    std::move(pattern), a.magnitude() * b.magnitude());
}

Rational TwoModeComb::phase_at_labels(std::int64_t k1, std::int64_t k2) const {
    if (kind_ != Kind::periodic) {
        throw Error(ErrorKind::InvalidArgument, "phase_at_labels needs a periodic comb");
    }
    return pattern_[static_cast<std::size_t>(mod_index(k1, len1_) * len2_ + mod_index(k2, len2_))];
}

SqrtPiScaled gkp_unit(int order) { return {Rational(order), 0}; }

CombState gkp_codeword(int order, int parity, CombRepresentation rep) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "order N must be >= 1");
    }
    if (parity != 0 && parity != 1) {
        throw Error(ErrorKind::InvalidArgument, "codeword label must be 0 or 1");
    }
    const SqrtPiScaled unit = gkp_unit(order);
    if (rep.kind == CombRepresentation::Kind::ideal) {
        return CombState::periodic(unit, Rational(parity * order), 2 * std::int64_t{order}, {Rational(0)});
    }
    if (rep.half_width < 0) {
        throw Error(ErrorKind::InvalidArgument, "window half-width must be >= 0");
    }
    std::vector<CombEntry> entries;
    for (std::int64_t k = -rep.half_width; k <= rep.half_width; ++k) {
        entries.push_back({Rational((2 * k + parity) * order), Rational(1), Rational(0)});
    }
    return CombState::finite(unit, std::move(entries));
}

CombState uniform_comb(SqrtPiScaled unit, const Rational &lo, const Rational &hi, const Rational &step) {
    if (step <= Rational(0)) {
        throw Error(ErrorKind::InvalidArgument, "comb step must be positive");
    }
    std::vector<CombEntry> entries;
    for (Rational v = lo; v <= hi; v += step) {
        entries.push_back({v, Rational(1), Rational(0)});
    }
    return CombState::finite(unit, std::move(entries));
}

Rational gkp_gate_phase(const GkpGate &gate, const Rational &index, int order) {
    const Rational n(order);
    switch (gate.kind) {
        case GkpGate::Kind::Z:
            return -index / n;
        case GkpGate::Kind::stab_q:
            return Rational(-2) * index / n;
        case GkpGate::Kind::translate_q:
            return -gate.amount * index / n;
        case GkpGate::Kind::S:
            return index * index / (Rational(2) * n * n);
        case GkpGate::Kind::T:
            return rational_pow(index, 4) / (Rational(4) * rational_pow(n, 4));
        case GkpGate::Kind::X:
        case GkpGate::Kind::stab_p:
        case GkpGate::Kind::translate_p:
            return Rational(0);
    }
    return Rational(0);
}

Rational gkp_gate_shift(const GkpGate &gate, int order) {
    switch (gate.kind) {
        case GkpGate::Kind::X:
            return Rational(order);
        case GkpGate::Kind::stab_p:
            return Rational(2 * order);
        case GkpGate::Kind::translate_p:
            return gate.amount * order;
        default:
            return Rational(0);
    }
}

CombState apply_phase_function(const CombState &state, const std::function<Rational(const Rational &)> &f) {
    if (state.kind() == CombState::Kind::finite) {
        std::vector<CombEntry> entries = state.entries();
        for (auto &e : entries) {
            e.phase += f(e.index);
        }
        return CombState::finite(state.unit(), std::move(entries));
    }
    const Rational offset = state.offset();
    const std::int64_t period = state.period();
    const NewtonPhase1 g =
        NewtonPhase1::sample([&](std::int64_t k) { return f(offset + Rational(k) * period); });
    const auto old_len = static_cast<std::int64_t>(state.pattern().size());
    const std::int64_t len = checked_length(std::lcm(old_len, g.period()));
    std::vector<Rational> pattern(static_cast<std::size_t>(len));
    for (std::int64_t k = 0; k < len; ++k) {
        pattern[static_cast<std::size_t>(k)] = state.phase_at_label(k) + g.eval_mod2(k);
    }
    return CombState::periodic(state.unit(), offset, period, std::move(pattern), state.magnitude());
}

CombState gkp_apply(const GkpGate &gate, const CombState &state, int order) {
    require_regime(state.unit(), order);
    const Rational shift = gkp_gate_shift(gate, order);
    if (shift != Rational(0)) {
        return shift_comb(state, shift);
    }
    return apply_phase_function(state, [&](const Rational &v) { return gkp_gate_phase(gate, v, order); });
}

TwoModeComb gkp_apply_cz(const TwoModeComb &state, int order1, int order2) {
    require_regime(state.unit1(), order1);
    require_regime(state.unit2(), order2);
    const Rational scale(-1, std::int64_t{order1} * order2);
    if (state.kind() == CombState::Kind::finite) {
        std::vector<TwoModeEntry> entries = state.entries();
        for (auto &e : entries) {
            e.phase += scale * e.index1 * e.index2;
        }
        return TwoModeComb::finite(state.unit1(), state.unit2(), std::move(entries));
    }
    const Rational o1 = state.offset1();
    const Rational o2 = state.offset2();
    const std::int64_t p1 = state.period1();
    const std::int64_t p2 = state.period2();
    const NewtonPhase2 g = NewtonPhase2::sample([&](std::int64_t k1, std::int64_t k2) {
        return scale * (o1 + Rational(k1) * p1) * (o2 + Rational(k2) * p2);
    });
    const std::int64_t len1 = checked_length(std::lcm(state.len1(), g.period(true)));
    const std::int64_t len2 = checked_length(std::lcm(state.len2(), g.period(false)));
    checked_length(len1 * len2);
    std::vector<Rational> pattern(static_cast<std::size_t>(len1 * len2));
    for (std::int64_t a = 0; a < len1; ++a) {
        for (std::int64_t b = 0; b < len2; ++b) {
            pattern[static_cast<std::size_t>(a * len2 + b)] = state.phase_at_labels(a, b) + g.eval_mod2(a, b);
        }
    }
    return TwoModeComb::periodic(state.unit1(), state.unit2(), o1, p1, o2, p2, len1, len2, std::move(pattern),
                                 state.magnitude());
}

CombState translate_q_absolute(const CombState &state, const SqrtPiScaled &eta, int order) {
    require_regime(state.unit(), order);
    if (eta.coeff == Rational(0)) {
        return state;
    }
    if (eta.sqrt_pi_exp + state.unit().sqrt_pi_exp != 2) {
        throw Error(ErrorKind::NonRationalPhase,
                    "translation amount gives an irrational multiple of pi on the comb");
    }
    return apply_phase_function(state, [&](const Rational &v) { return -eta.coeff * v; });
}

PhaseComparison comb_equal_up_to_phase(const CombState &s1, const CombState &s2) {
    if (s1.kind() != s2.kind() || !(s1.unit() == s2.unit())) {
        return {};
    }
    if (s1.kind() == CombState::Kind::finite) {
        const auto &a = s1.entries();
        const auto &b = s2.entries();
        if (a.size() != b.size()) {
            return {};
        }
        if (a.empty()) {
            return {true, Rational(0)};
        }
        const Rational diff = reduce_mod2(a[0].phase - b[0].phase);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].index != b[i].index || a[i].magnitude != b[i].magnitude ||
                reduce_mod2(a[i].phase - b[i].phase) != diff) {
                return {};
            }
        }
        return {true, diff};
    }
    if (s1.offset() != s2.offset() || s1.period() != s2.period() || s1.magnitude() != s2.magnitude()) {
        return {};
    }
    const std::int64_t len =
        std::lcm(static_cast<std::int64_t>(s1.pattern().size()), static_cast<std::int64_t>(s2.pattern().size()));
    const Rational diff = reduce_mod2(s1.phase_at_label(0) - s2.phase_at_label(0));
    for (std::int64_t k = 1; k < len; ++k) {
        if (reduce_mod2(s1.phase_at_label(k) - s2.phase_at_label(k)) != diff) {
            return {};
        }
    }
    return {true, diff};
}

PhaseComparison comb_equal_up_to_phase(const TwoModeComb &s1, const TwoModeComb &s2) {
    if (s1.kind() != s2.kind() || !(s1.unit1() == s2.unit1()) || !(s1.unit2() == s2.unit2())) {
        return {};
    }
    if (s1.kind() == CombState::Kind::finite) {
        const auto &a = s1.entries();
        const auto &b = s2.entries();
        if (a.size() != b.size()) {
            return {};
        }
        if (a.empty()) {
            return {true, Rational(0)};
        }
        const Rational diff = reduce_mod2(a[0].phase - b[0].phase);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].index1 != b[i].index1 || a[i].index2 != b[i].index2 || a[i].magnitude != b[i].magnitude ||
                reduce_mod2(a[i].phase - b[i].phase) != diff) {
                return {};
            }
        }
        return {true, diff};
    }
    if (s1.offset1() != s2.offset1() || s1.offset2() != s2.offset2() || s1.period1() != s2.period1() ||
        s1.period2() != s2.period2() || s1.magnitude() != s2.magnitude()) {
        return {};
    }
    const std::int64_t len1 = std::lcm(s1.len1(), s2.len1());
    const std::int64_t len2 = std::lcm(s1.len2(), s2.len2());
    const Rational diff = reduce_mod2(s1.phase_at_labels(0, 0) - s2.phase_at_labels(0, 0));
    for (std::int64_t a = 0; a < len1; ++a) {
        for (std::int64_t b = 0; b < len2; ++b) {
            if (reduce_mod2(s1.phase_at_labels(a, b) - s2.phase_at_labels(a, b)) != diff) {
                return {};
            }
        }
    }
    return {true, diff};
}

CombState trans_projector_apply(const CombState &state, int parity, int order) {
    require_regime(state.unit(), order);
    if (parity != 0 && parity != 1) {
        throw Error(ErrorKind::InvalidArgument, "codeword label must be 0 or 1");
    }
    const Rational n(order);
    auto keep = [&](const Rational &v) {
        const Rational x = v / n - Rational(parity);
        return is_integer(x) && x.numerator() % 2 == 0;
    };
    if (state.kind() == CombState::Kind::finite) {
        std::vector<CombEntry> kept;
        for (const auto &e : state.entries()) {
            if (keep(e.index)) {
                kept.push_back(e);
            }
        }
        if (kept.empty()) {
            throw Error(ErrorKind::ZeroProjection, "no support in the selected sector");
        }
        return CombState::finite(state.unit(), std::move(kept));
    }
    // Surviving labels form a single coset k0 + stride Z.
    const std::int64_t two_n = 2 * std::int64_t{order};
    const std::int64_t stride = two_n / std::gcd(state.period(), two_n);
    for (std::int64_t k0 = 0; k0 < stride; ++k0) {
        if (!keep(state.offset() + Rational(k0) * state.period())) {
            continue;
        }
        const auto len = static_cast<std::int64_t>(state.pattern().size());
        std::vector<Rational> pattern(static_cast<std::size_t>(len));
        for (std::int64_t t = 0; t < len; ++t) {
            pattern[static_cast<std::size_t>(t)] = state.phase_at_label(k0 + t * stride);
        }
        return CombState::periodic(state.unit(), state.offset() + Rational(k0) * state.period(),
                                   stride * state.period(), std::move(pattern), state.magnitude());
    }
    throw Error(ErrorKind::ZeroProjection, "no support in the selected sector");
}

bool trans_primitive_validity(const CombState &state, int order) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "order N must be >= 1");
    }
    bool even = false;
    bool odd = false;
    auto visit = [&](const Rational &v) {
        const Rational x = v / Rational(order);
        if (is_integer(x)) {
            (x.numerator() % 2 == 0 ? even : odd) = true;
        }
    };
    if (state.kind() == CombState::Kind::finite) {
        for (const auto &e : state.entries()) {
            if (e.magnitude != Rational(0)) {
                visit(e.index);
            }
        }
    } else if (state.magnitude() != Rational(0)) {
        // Membership of kN is periodic in the label with a period dividing 2N.
        for (std::int64_t k = 0; k < 2 * std::int64_t{order}; ++k) {
            visit(state.offset() + Rational(k) * state.period());
        }
    }
    return even && odd;
}

}  // namespace cvcodes
