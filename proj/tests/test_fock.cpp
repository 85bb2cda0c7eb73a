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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "cvcodes/errors.hpp"
#include "cvcodes/fock.hpp"
#include "cvcodes/random.hpp"

namespace cvcodes {
namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected cvcodes::Error";
    return ErrorKind::InvalidArgument;
}

// Oracle: dense 2N-term rotation sum built directly from e^{i theta m}.
ComplexVector projector_sum_oracle(const ComplexVector &x, int order, int parity) {
    const int dim = static_cast<int>(x.size());
    ComplexVector out = ComplexVector::Zero(dim);
    for (int k = 0; k < 2 * order; ++k) {
        const double sign = (parity == 1 && k % 2 == 1) ? -1.0 : 1.0;
        for (int m = 0; m < dim; ++m) {
            out(m) += sign * std::exp(1i * (kPi * k * m / order)) * x(m);
        }
    }
    return out;
}

TEST(FockVectorTest, NormalizedFlagIsChecked) {
    ComplexVector v(2);
    v << 1.0, 1.0;
    EXPECT_EQ(kind_of([&] { FockVector bad(v, true); }), ErrorKind::InvalidArgument);
    EXPECT_NO_THROW(FockVector(v / std::sqrt(2.0), true));
    EXPECT_EQ(kind_of([] { FockVector(ComplexVector::Zero(3)).normalized(); }), ErrorKind::ZeroProjection);
}

TEST(FockOperatorTest, NumberOperatorIsDiagonalRange) {
    const FockOperator n = fock_operator({OperatorKind::number}, 3);
    EXPECT_EQ(n.structure(), Structure::diagonal());
    EXPECT_EQ(n.entries(), (ComplexMatrix(3, 3) << 0, 0, 0, 0, 1, 0, 0, 0, 2).finished());
}

TEST(FockOperatorTest, NumberShiftLowersByOne) {
    const FockOperator g = fock_operator({OperatorKind::number_shift, 0.0, 1}, 2);
    const FockVector out = g.apply(FockVector::basis(2, 1));
    EXPECT_EQ(out[0], 1.0 + 0i);
    EXPECT_EQ(out[1], 0.0 + 0i);
}

TEST(FockOperatorTest, RotationQuarterTurn) {
    const FockOperator r = fock_operator({OperatorKind::rotation, kPi / 2.0, 0}, 3);
    EXPECT_NEAR(std::abs(r.entries()(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.entries()(1, 1) - 1i), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.entries()(2, 2) + 1.0), 0.0, 1e-15);
    EXPECT_TRUE(r.is_unitary());
}

TEST(FockOperatorTest, AnnihilationMatchesSqrtLadder) {
    const FockOperator a = annihilation_op(5);
    for (int l = 1; l < 5; ++l) {
        EXPECT_DOUBLE_EQ(a.entries()(l - 1, l).real(), std::sqrt(static_cast<double>(l)));
    }
    EXPECT_EQ(a.structure(), Structure::upper(1));
}

TEST(FockOperatorTest, InvalidDimensions) {
    EXPECT_EQ(kind_of([] { number_op(0); }), ErrorKind::InvalidDimension);
    EXPECT_EQ(kind_of([] { number_shift_op(3, 3); }), ErrorKind::InvalidDimension);
}

TEST(FockOperatorTest, StructureMustMatchSparsity) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(1, 0) = 1.0;
    EXPECT_EQ(kind_of([&] { FockOperator(m, Structure::diagonal()); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { FockOperator(m, Structure::upper(1)); }), ErrorKind::InvalidArgument);
    EXPECT_NO_THROW(FockOperator(m, Structure::lower(1)));
}

TEST(UInvariantProjectorTest, SelectsRotationCodeSupport) {
    std::vector<Rational> spectrum;
    for (int m = 0; m < 8; ++m) {
        spectrum.emplace_back(m);
    }
    // Rotation code N = 2: logical Z angle pi/2.
    const ProjectorResult p0 = u_invariant_projector(spectrum, Rational(1, 2), 0);
    EXPECT_EQ(p0.selected, (std::vector<int>{0, 4}));
    const ProjectorResult p1 = u_invariant_projector(spectrum, Rational(1, 2), 1);
    EXPECT_EQ(p1.selected, (std::vector<int>{2, 6}));
    const ProjectorResult empty = u_invariant_projector(spectrum, Rational(1, 10), 1);
    EXPECT_TRUE(empty.empty);
    EXPECT_EQ(empty.projector.entries(), ComplexMatrix::Zero(8, 8));
}

TEST(UInvariantProjectorTest, ProjectorsAreExactOrthogonalIdempotents) {
    std::vector<Rational> spectrum;
    for (int m = 0; m < 30; ++m) {
        spectrum.emplace_back(m);
    }
    for (int n = 1; n <= 5; ++n) {
        const auto p0 = u_invariant_projector(spectrum, Rational(1, n), 0).projector.entries();
        const auto p1 = u_invariant_projector(spectrum, Rational(1, n), 1).projector.entries();
        EXPECT_EQ(p0 * p0, p0);
        EXPECT_EQ(p1 * p1, p1);
        EXPECT_EQ(p0 * p1, ComplexMatrix::Zero(30, 30));
        for (int m = 0; m < 30; ++m) {
            EXPECT_TRUE(p0(m, m) == 0.0 || p0(m, m) == 1.0);
        }
    }
}

TEST(RotCodewordTest, SingleComponentSelection) {
    const std::vector<int> levels{0, 2};
    const FockVector theta = FockVector::superposition(4, levels);
    const FockVector zero = rot_codeword_from_primitive(theta, 2, 0);
    const FockVector one = rot_codeword_from_primitive(theta, 2, 1);
    EXPECT_NEAR(std::abs(zero[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(one[2] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(zero.amplitudes().norm(), 1.0, 1e-15);
}

TEST(RotCodewordTest, CoherentStateMatchesProjectorSumOracle) {
    constexpr int kDim = 40;
    const double alpha = 2.0;
    // Independent oracle 1: closed-form coherent amplitudes, filtered.
    ComplexVector expected = ComplexVector::Zero(kDim);
    for (int m = 0; m < kDim; m += 4) {
        expected(m) = std::pow(alpha, m) / std::sqrt(std::tgamma(m + 1.0));
    }
    expected /= expected.norm();
    const FockVector got = rot_codeword_from_primitive(FockVector::coherent(kDim, alpha), 2, 0);
    EXPECT_LT((got.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);

    // Independent oracle 2: the literal rotation sum, renormalized.
    ComplexVector raw(kDim);
    for (int m = 0; m < kDim; ++m) {
        raw(m) = std::pow(alpha, m) / std::sqrt(std::tgamma(m + 1.0));
    }
    ComplexVector summed = projector_sum_oracle(raw, 2, 0);
    summed /= summed.norm();
    EXPECT_LT((got.amplitudes() - summed).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RotCodewordTest, ZeroProjectionWhenPrimitiveMissesLattice) {
    const FockVector one = FockVector::basis(4, 1);
    EXPECT_EQ(kind_of([&] { rot_codeword_from_primitive(one, 2, 0); }), ErrorKind::ZeroProjection);
    EXPECT_EQ(kind_of([&] { rot_codeword_from_primitive(one, 2, 1); }), ErrorKind::ZeroProjection);
}

TEST(RotCodewordTest, RequiresTwoNLevels) {
    EXPECT_EQ(kind_of([] { rot_codeword_from_primitive(FockVector::basis(3, 0), 2, 0); }),
              ErrorKind::InvalidDimension);
}

TEST(RotCodewordTest, RotationByPiOverNActsAsZ) {
    std::mt19937_64 rng(20260101);
    for (int n = 1; n <= 6; ++n) {
        for (int dim : {4 * n, 4 * n + 7}) {
            const FockVector theta = random_valid_primitive(rng, n, dim);
            const FockOperator r = rotation_op(kPi / n, dim);
            for (int j = 0; j < 2; ++j) {
                const FockVector w = rot_codeword_from_primitive(theta, n, j);
                const ComplexVector rotated = r.apply(w).amplitudes();
                const double sign = j == 0 ? 1.0 : -1.0;
                EXPECT_LT((rotated - sign * w.amplitudes()).cwiseAbs().maxCoeff(), 1e-10)
                    << "N=" << n << " D=" << dim << " j=" << j;
            }
        }
    }
}

TEST(PrimitiveValidityTest, Examples) {
    const std::vector<int> a{0, 2};
    const std::vector<int> b{0, 4};
    EXPECT_TRUE(rot_primitive_validity(FockVector::superposition(8, a), 2));
    EXPECT_FALSE(rot_primitive_validity(FockVector::superposition(8, b), 2));
    EXPECT_TRUE(rot_primitive_validity(FockVector::coherent(3, 1.0), 1));
}

TEST(LogicalOpTest, ZForOrderTwo) {
    const FockOperator z = rot_logical_op(LogicalGate::Z, 2, 4);
    const ExactDiagonal expected{ExactDiagonal::Unit::pi_phase,
                                 {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}};
    EXPECT_EQ(*z.exact_diagonal(), expected);
    EXPECT_NEAR(std::abs(z.entries()(1, 1) - 1i), 0.0, 1e-15);
}

TEST(LogicalOpTest, XShiftsIdealSupport) {
    const std::vector<int> levels{0, 4};
    const FockVector v = rot_logical_op(LogicalGate::X, 2, 8).apply(FockVector::superposition(8, levels));
    EXPECT_NEAR(std::abs(v[2] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(v.amplitudes().norm(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(LogicalOpTest, HadamardOrderOne) {
    const FockOperator h = rot_logical_op(LogicalGate::H, 1, 3);
    const double pref = 1.0 / std::sqrt(2.0 * kPi);
    for (int m = 0; m < 3; ++m) {
        for (int mp = 0; mp < 3; ++mp) {
            const double sign = (m * mp) % 2 == 0 ? 1.0 : -1.0;
            EXPECT_NEAR(std::abs(h.entries()(m, mp) - sign * pref), 0.0, 1e-15);
        }
    }
}

TEST(LogicalOpTest, SAndTPhases) {
    const auto s = rot_logical_op(LogicalGate::S, 3, 10).exact_diagonal()->values;
    const auto t = rot_logical_op(LogicalGate::T, 3, 10).exact_diagonal()->values;
    for (int m = 0; m < 10; ++m) {
        EXPECT_EQ(s[static_cast<std::size_t>(m)], reduce_mod2(Rational(m * m, 18)));
        EXPECT_EQ(t[static_cast<std::size_t>(m)], reduce_mod2(Rational(m * m * m * m, 324)));
    }
}

TEST(LogicalOpTest, XNeedsRoom) {
    EXPECT_EQ(kind_of([] { rot_logical_op(LogicalGate::X, 4, 4); }), ErrorKind::InvalidDimension);
}

TEST(LogicalOpTest, ZSquaredIsStabilizerRotation) {
    for (int n = 1; n <= 6; ++n) {
        const FockOperator z2 = rot_logical_op(LogicalGate::Z, n, 32).power(2);
        EXPECT_EQ(*z2.exact_diagonal(), *rotation_op_pi(Rational(2, n), 32).exact_diagonal());
    }
}

TEST(CrotTest, Examples) {
    EXPECT_EQ(crot(1, 1, 2, 2).phase_at(1, 1), Rational(1));
    for (int mp = 0; mp < 5; ++mp) {
        EXPECT_EQ(crot(2, 3, 5, 5).phase_at(0, mp), Rational(0));
    }
    EXPECT_EQ(crot(2, 3, 4, 5).phase_at(2, 3), Rational(1));
    EXPECT_NEAR(std::abs(crot(2, 3, 4, 5).entries()(2 * 5 + 3, 2 * 5 + 3) + 1.0), 0.0, 1e-15);
}

TEST(CrotTest, ActsAsCzOnIdealCodewords) {
    const double eps = 1e-3;
    const int n = 2;
    const int m = 3;
    const int d = 24;
    const TwoModeOperator cz = crot(n, m, d, d);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const FockVector u = approx_ideal_rot_codeword(n, a, d, eps);
            const FockVector v = approx_ideal_rot_codeword(m, b, d, eps);
            const std::complex<double> overlap = kron(u, v).dot(cz.apply_product(u, v));
            const double expected = a * b == 1 ? -1.0 : 1.0;
            EXPECT_NEAR(std::abs(overlap - expected), 0.0, 10 * eps);
        }
    }
}

TEST(ApproxIdealTest, Examples) {
    const FockVector big = approx_ideal_rot_codeword(2, 0, 16, 1e3);
    EXPECT_NEAR(std::abs(big[0] - 1.0), 0.0, 1e-12);
    const FockVector zero = approx_ideal_rot_codeword(2, 0, 8, 0.0);
    EXPECT_NEAR(std::abs(zero[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(zero[4] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    const FockVector one = approx_ideal_rot_codeword(2, 1, 8, 0.0);
    EXPECT_NEAR(std::abs(one[2] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(one[6] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_EQ(kind_of([] { approx_ideal_rot_codeword(4, 1, 4, 0.0); }), ErrorKind::InvalidDimension);
}

TEST(ApproxIdealTest, SSquaredMatchesZ) {
    for (double eps : {1e-1, 1e-2}) {
        for (int n = 1; n <= 3; ++n) {
            const int d = 64;
            const FockOperator s2 = rot_logical_op(LogicalGate::S, n, d).power(2);
            const FockOperator z = rot_logical_op(LogicalGate::Z, n, d);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const FockVector bi = approx_ideal_rot_codeword(n, i, d, eps);
                    const FockVector bj = approx_ideal_rot_codeword(n, j, d, eps);
                    const auto lhs = bi.amplitudes().dot(s2.apply(bj).amplitudes());
                    const auto rhs = bi.amplitudes().dot(z.apply(bj).amplitudes());
                    EXPECT_LE(std::abs(lhs - rhs), 10 * eps);
                }
            }
        }
    }
}

TEST(ApproxIdealTest, StabilizerRotationIsIdentityOnCode) {
    for (int n = 1; n <= 4; ++n) {
        const FockOperator r = rotation_op(2 * kPi / n, 64);
        for (int j = 0; j < 2; ++j) {
            const FockVector w = approx_ideal_rot_codeword(n, j, 64, 0.05);
            EXPECT_LT((r.apply(w).amplitudes() - w.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

}  // namespace
}  // namespace cvcodes
