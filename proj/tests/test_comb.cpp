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

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "cvcodes/comb.hpp"
#include "cvcodes/errors.hpp"

namespace cvcodes {
namespace {

using K = GkpGate::Kind;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected cvcodes::Error";
    return ErrorKind::InvalidArgument;
}

std::vector<Rational> indices(const CombState &c) {
    std::vector<Rational> out;
    for (const auto &e : c.entries()) {
        out.push_back(e.index);
    }
    return out;
}

CombState finite_on(int order, std::vector<int> support) {
    std::vector<CombEntry> entries;
    for (int v : support) {
        entries.push_back({Rational(v), Rational(1), Rational(0)});
    }
    return CombState::finite(gkp_unit(order), std::move(entries));
}

TEST(GkpCodewordTest, WindowSupport) {
    EXPECT_EQ(indices(gkp_codeword(2, 0, CombRepresentation::window(1))),
              (std::vector<Rational>{Rational(-4), Rational(0), Rational(4)}));
    EXPECT_EQ(indices(gkp_codeword(2, 1, CombRepresentation::window(1))),
              (std::vector<Rational>{Rational(-2), Rational(2), Rational(6)}));
    for (const auto &e : gkp_codeword(2, 1, CombRepresentation::window(1)).entries()) {
        EXPECT_EQ(e.magnitude, Rational(1));
        EXPECT_EQ(e.phase, Rational(0));
    }
}

TEST(GkpCodewordTest, IdealDescriptor) {
    const CombState c = gkp_codeword(1, 0, CombRepresentation::ideal());
    EXPECT_EQ(c.kind(), CombState::Kind::periodic);
    EXPECT_EQ(c.offset(), Rational(0));
    EXPECT_EQ(c.period(), 2);
    EXPECT_EQ(c.pattern(), (std::vector<Rational>{Rational(0)}));
}

TEST(CombStateTest, FiniteRejectsDuplicatesAndSorts) {
    EXPECT_EQ(kind_of([] { finite_on(1, {0, 3, 0}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(indices(finite_on(1, {5, -1, 2})), (std::vector<Rational>{Rational(-1), Rational(2), Rational(5)}));
}

TEST(CombStateTest, PeriodicCanonicalizesOffsetAndPattern) {
    // Offset 7 with period 4 relabels to offset 3; the pattern rotates with it.
    const CombState a = CombState::periodic(gkp_unit(1), Rational(7), 4, {Rational(0), Rational(1, 2)});
    EXPECT_EQ(a.offset(), Rational(3));
    EXPECT_EQ(a.phase_at_label(1), Rational(0));
    EXPECT_EQ(a.phase_at_label(0), Rational(1, 2));
    // The point 7 = 3 + 1*4 keeps its phase (label 0 before relabeling).
    const CombState b = CombState::periodic(gkp_unit(1), Rational(3), 4, {Rational(1, 2), Rational(0)});
    EXPECT_EQ(a, b);
    const CombState repeated =
        CombState::periodic(gkp_unit(1), Rational(0), 2, {Rational(1), Rational(1), Rational(1)});
    EXPECT_EQ(repeated.pattern().size(), 1U);
}

TEST(GkpApplyTest, ZGivesParityPhase) {
    for (int n = 1; n <= 5; ++n) {
        for (int j = 0; j < 2; ++j) {
            const CombState w = gkp_codeword(n, j, CombRepresentation::ideal());
            const PhaseComparison cmp = comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::Z), w, n), w);
            EXPECT_TRUE(cmp.equal);
            EXPECT_EQ(cmp.global_phase, Rational(j));
        }
    }
}

TEST(GkpApplyTest, XSwapsIdealCodewords) {
    for (int n = 1; n <= 5; ++n) {
        const CombState w0 = gkp_codeword(n, 0, CombRepresentation::ideal());
        const CombState w1 = gkp_codeword(n, 1, CombRepresentation::ideal());
        EXPECT_EQ(gkp_apply(GkpGate::of(K::X), w0, n), w1);
        EXPECT_EQ(gkp_apply(GkpGate::of(K::X), w1, n), w0);
    }
}

TEST(GkpApplyTest, SAndTPhasesOnOddCodeword) {
    for (int n = 1; n <= 5; ++n) {
        const CombState w1 = gkp_codeword(n, 1, CombRepresentation::ideal());
        const CombState w0 = gkp_codeword(n, 0, CombRepresentation::ideal());
        EXPECT_EQ(comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::S), w1, n), w1).global_phase, Rational(1, 2));
        EXPECT_EQ(comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::T), w1, n), w1).global_phase, Rational(1, 4));
        EXPECT_EQ(comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::S), w0, n), w0).global_phase, Rational(0));
        EXPECT_EQ(comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::T), w0, n), w0).global_phase, Rational(0));
    }
}

TEST(GkpApplyTest, WindowPhasesMatchClosedForm) {
    // Oracle: evaluate the phase polynomials directly at each support point.
    const int n = 3;
    const CombState w = gkp_codeword(n, 1, CombRepresentation::window(4));
    const CombState s = gkp_apply(GkpGate::of(K::S), w, n);
    const CombState t = gkp_apply(GkpGate::of(K::T), w, n);
    const CombState z = gkp_apply(GkpGate::of(K::Z), w, n);
    for (std::size_t i = 0; i < w.entries().size(); ++i) {
        const Rational v = w.entries()[i].index;
        EXPECT_EQ(s.entries()[i].phase, reduce_mod2(v * v / Rational(2 * n * n)));
        EXPECT_EQ(t.entries()[i].phase, reduce_mod2(v * v * v * v / Rational(4 * n * n * n * n)));
        EXPECT_EQ(z.entries()[i].phase, reduce_mod2(-v / Rational(n)));
    }
}

TEST(GkpApplyTest, CompositionIdentities) {
    for (int n = 1; n <= 4; ++n) {
        for (int j = 0; j < 2; ++j) {
            const CombState w = gkp_codeword(n, j, CombRepresentation::ideal());
            auto apply = [&](K k, const CombState &s) { return gkp_apply(GkpGate::of(k), s, n); };
            EXPECT_EQ(apply(K::Z, apply(K::Z, w)), apply(K::stab_q, w));
            EXPECT_EQ(apply(K::X, apply(K::X, w)), apply(K::stab_p, w));
            const PhaseComparison stab_q = comb_equal_up_to_phase(apply(K::stab_q, w), w);
            const PhaseComparison stab_p = comb_equal_up_to_phase(apply(K::stab_p, w), w);
            EXPECT_TRUE(stab_q.equal && stab_q.global_phase == Rational(0));
            EXPECT_TRUE(stab_p.equal && stab_p.global_phase == Rational(0));
            EXPECT_TRUE(comb_equal_up_to_phase(apply(K::T, apply(K::T, w)), apply(K::S, w)).equal);
            EXPECT_TRUE(comb_equal_up_to_phase(apply(K::S, apply(K::S, w)), apply(K::Z, w)).equal);
        }
    }
}

TEST(GkpApplyTest, CzParityPhase) {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const TwoModeComb in = TwoModeComb::tensor(gkp_codeword(n, a, CombRepresentation::ideal()),
                                                               gkp_codeword(m, b, CombRepresentation::ideal()));
                    const PhaseComparison cmp = comb_equal_up_to_phase(gkp_apply_cz(in, n, m), in);
                    EXPECT_TRUE(cmp.equal);
                    EXPECT_EQ(cmp.global_phase, Rational(a * b)) << n << m << a << b;
                }
            }
        }
    }
}

TEST(GkpApplyTest, CzOnWindowsMatchesClosedForm) {
    const TwoModeComb in = TwoModeComb::tensor(gkp_codeword(2, 1, CombRepresentation::window(2)),
                                               gkp_codeword(3, 1, CombRepresentation::window(2)));
    const TwoModeComb out = gkp_apply_cz(in, 2, 3);
    for (std::size_t i = 0; i < in.entries().size(); ++i) {
        const auto &e = out.entries()[i];
        EXPECT_EQ(e.phase, reduce_mod2(-e.index1 * e.index2 / Rational(6)));
    }
}

TEST(GkpApplyTest, TranslationsFollowUnits) {
    const CombState w = gkp_codeword(2, 0, CombRepresentation::window(1));
    const CombState shifted = gkp_apply(GkpGate::translate_p(Rational(1, 2)), w, 2);
    EXPECT_EQ(indices(shifted), (std::vector<Rational>{Rational(-3), Rational(1), Rational(5)}));
    const CombState q = gkp_apply(GkpGate::translate_q(Rational(1, 3)), w, 2);
    for (std::size_t i = 0; i < q.entries().size(); ++i) {
        EXPECT_EQ(q.entries()[i].phase, reduce_mod2(-Rational(1, 3) * w.entries()[i].index / Rational(2)));
    }
}

TEST(GkpApplyTest, UnitMismatchAndNonRationalPhase) {
    const CombState foreign = CombState::finite({Rational(1), 1}, {{Rational(0), Rational(1), Rational(0)}});
    EXPECT_EQ(kind_of([&] { gkp_apply(GkpGate::of(K::Z), foreign, 2); }), ErrorKind::UnitMismatch);
    const CombState w = gkp_codeword(2, 0, CombRepresentation::window(1));
    EXPECT_EQ(kind_of([&] { translate_q_absolute(w, {Rational(1), 1}, 2); }), ErrorKind::NonRationalPhase);
    // An absolute amount of sqrt(pi) * sqrt(pi) / 2 is pi/2 per unit momentum.
    const CombState ok = translate_q_absolute(w, {Rational(1, 2), 2}, 2);
    for (std::size_t i = 0; i < ok.entries().size(); ++i) {
        EXPECT_EQ(ok.entries()[i].phase, reduce_mod2(-w.entries()[i].index / Rational(2)));
    }
}

TEST(GkpApplyTest, GenericPhaseFunctionOnPeriodicComb) {
    const CombState w = gkp_codeword(3, 1, CombRepresentation::ideal());
    const CombState out = apply_phase_function(w, [](const Rational &v) { return v * v * v / Rational(7); });
    for (std::int64_t k = -20; k <= 20; ++k) {
        const Rational v = w.offset() + Rational(k * w.period());
        EXPECT_EQ(out.phase_at_label(k), reduce_mod2(v * v * v / Rational(7))) << k;
    }
}

TEST(CombEqualityTest, Examples) {
    const CombState w1 = gkp_codeword(2, 1, CombRepresentation::ideal());
    const CombState w0 = gkp_codeword(2, 0, CombRepresentation::ideal());
    const PhaseComparison self = comb_equal_up_to_phase(w1, w1);
    EXPECT_TRUE(self.equal);
    EXPECT_EQ(self.global_phase, Rational(0));
    EXPECT_EQ(comb_equal_up_to_phase(gkp_apply(GkpGate::of(K::Z), w1, 2), w1).global_phase, Rational(1));
    EXPECT_FALSE(comb_equal_up_to_phase(w0, w1).equal);
}

TEST(TransProjectorTest, Examples) {
    const CombState c = finite_on(2, {0, 2, 4});
    EXPECT_EQ(indices(trans_projector_apply(c, 0, 2)), (std::vector<Rational>{Rational(0), Rational(4)}));
    EXPECT_EQ(indices(trans_projector_apply(c, 1, 2)), (std::vector<Rational>{Rational(2)}));
    EXPECT_EQ(kind_of([] { trans_projector_apply(finite_on(2, {0, 4, 8}), 1, 2); }), ErrorKind::ZeroProjection);
}

TEST(TransProjectorTest, PeriodicInput) {
    // All integers with N = 2: keeps the multiples of 4 for j = 0.
    const CombState all = CombState::periodic(gkp_unit(2), Rational(0), 1, {Rational(0)});
    EXPECT_EQ(trans_projector_apply(all, 0, 2), gkp_codeword(2, 0, CombRepresentation::ideal()));
    EXPECT_EQ(trans_projector_apply(all, 1, 2), gkp_codeword(2, 1, CombRepresentation::ideal()));
}

TEST(TransPrimitiveTest, Examples) {
    EXPECT_TRUE(trans_primitive_validity(uniform_comb(gkp_unit(2), Rational(-8), Rational(8)), 2));
    EXPECT_FALSE(trans_primitive_validity(finite_on(2, {0, 4}), 2));
    EXPECT_TRUE(trans_primitive_validity(finite_on(2, {0, 2}), 2));
}

}  // namespace
}  // namespace cvcodes
