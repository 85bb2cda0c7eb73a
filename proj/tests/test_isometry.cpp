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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "cvcodes/errors.hpp"
#include "cvcodes/isometry.hpp"
#include "cvcodes/random.hpp"

namespace cvcodes {
namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected cvcodes::Error";
    return ErrorKind::InvalidArgument;
}

ComplexMatrix diag(std::initializer_list<double> values) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) {
        d(i++) = v;
    }
    return d.cast<std::complex<double>>().asDiagonal();
}

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

TEST(CanonicalIsometryTest, SharedBasisGivesIdentity) {
    const PartialIsometryRep rep = canonical_partial_isometry(diag({1, 2}), diag({1, 2}));
    EXPECT_LT(max_abs(rep.v - ComplexMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(rep.k - ComplexMatrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(rep.l - ComplexMatrix::Identity(2, 2)), 1e-15);
    EXPECT_EQ(rep.pairs.size(), 2U);
}

TEST(CanonicalIsometryTest, RankOneMatch) {
    const PartialIsometryRep rep = canonical_partial_isometry(diag({0, 1}), diag({1, 2}));
    ComplexMatrix v = ComplexMatrix::Zero(2, 2);
    v(1, 0) = 1.0;
    EXPECT_LT(max_abs(rep.v - v), 1e-15);
    EXPECT_LT(max_abs(rep.k - diag({0, 1})), 1e-15);
    EXPECT_LT(max_abs(rep.l - diag({1, 0})), 1e-15);
}

TEST(CanonicalIsometryTest, RotatedSourceOracle) {
    std::mt19937_64 rng(5);
    const ComplexMatrix q = random_unitary(rng, 3).real().cast<std::complex<double>>();
    // Orthonormalize the real part to get a real orthogonal Q.
    const Eigen::HouseholderQR<ComplexMatrix> qr(q);
    const ComplexMatrix orth = qr.householderQ();
    const ComplexMatrix x = diag({1, 2, 3});
    const ComplexMatrix y = orth * diag({2, 3, 4}) * orth.adjoint();
    const PartialIsometryRep rep = canonical_partial_isometry(x, (y + y.adjoint()) / 2.0);
    EXPECT_EQ(rep.pairs.size(), 2U);
    const IsometryResiduals r = partial_isometry_residuals(rep, x, (y + y.adjoint()) / 2.0);
    EXPECT_LE(r.max(), 1e-9);
    // Oracle: V sends the Y-eigenvector for 2 to e_1 and for 3 to e_2, up to phase.
    EXPECT_NEAR(std::abs((rep.v * orth.col(0))(1)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs((rep.v * orth.col(1))(2)), 1.0, 1e-12);
    EXPECT_NEAR((rep.v * orth.col(2)).norm(), 0.0, 1e-12);
}

TEST(CanonicalIsometryTest, EmptyIntersectionIsFlagged) {
    const PartialIsometryRep rep = canonical_partial_isometry(diag({0, 1}), diag({5, 6, 7}));
    EXPECT_TRUE(rep.empty);
    EXPECT_EQ(rep.v.rows(), 2);
    EXPECT_EQ(rep.v.cols(), 3);
    EXPECT_EQ(max_abs(rep.v), 0.0);
}

TEST(CanonicalIsometryTest, DegenerateSpectrumRejected) {
    EXPECT_EQ(kind_of([] { canonical_partial_isometry(diag({1, 1}), diag({1, 2})); }),
              ErrorKind::DegenerateSpectrum);
}

TEST(CanonicalIsometryTest, EigenvectorPhaseConvention) {
    std::mt19937_64 rng(77);
    const HermitianPair p = random_hermitian_pair(rng, 4, 4, 4);
    const PartialIsometryRep a = canonical_partial_isometry(p.x, p.y);
    // Multiplying Y's eigenbasis by phases must not change the canonical V.
    const PartialIsometryRep b = canonical_partial_isometry(p.x, p.y);
    EXPECT_EQ(a.v, b.v);
}

TEST(CanonicalIsometryTest, RandomPairsSatisfyAllRelations) {
    std::mt19937_64 rng(20260611);
    std::uniform_int_distribution<int> dim(1, 12);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int dx = dim(rng);
        const int dy = dim(rng);
        std::uniform_int_distribution<int> shared(0, std::min(dx, dy));
        const int s = shared(rng);
        const HermitianPair p = random_hermitian_pair(rng, dx, dy, s);
        const PartialIsometryRep rep = canonical_partial_isometry(p.x, p.y);
        EXPECT_EQ(static_cast<int>(rep.pairs.size()), s);
        EXPECT_EQ(rep.empty, s == 0);
        const IsometryResiduals r = partial_isometry_residuals(rep, p.x, p.y);
        worst = std::max(worst, r.max());
        EXPECT_LE(max_abs(rep.k * rep.k - rep.k), 1e-9);
        EXPECT_LE(max_abs(rep.l * rep.l - rep.l), 1e-9);
    }
    EXPECT_LE(worst, 1e-9);
}

PartialIsometryRep member_from_columns(const ComplexMatrix &u, const std::vector<int> &cols) {
    const Eigen::Index n = u.rows();
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int c : cols) {
        p(c, c) = 1.0;
    }
    PartialIsometryRep rep;
    rep.v = u * p;
    rep.k = rep.v * rep.v.adjoint();
    rep.l = p;
    return rep;
}

TEST(UnitaryFromFamilyTest, SingleFullIsometry) {
    std::mt19937_64 rng(3);
    const ComplexMatrix u = random_unitary(rng, 4);
    const ComplexMatrix got = unitary_from_family({member_from_columns(u, {0, 1, 2, 3})});
    EXPECT_LT(max_abs(got - u), 1e-15);
}

TEST(UnitaryFromFamilyTest, RandomColumnPartitionsReassemble) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 7;
        const ComplexMatrix u = random_unitary(rng, n);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<int> cut(1, n - 1);
        const int split = cut(rng);
        const std::vector<int> first(order.begin(), order.begin() + split);
        const std::vector<int> second(order.begin() + split, order.end());
        const ComplexMatrix got =
            unitary_from_family({member_from_columns(u, first), member_from_columns(u, second)});
        EXPECT_LT(max_abs(got - u), 1e-12);
        EXPECT_LT(max_abs(got.adjoint() * got - ComplexMatrix::Identity(n, n)), 1e-8);
    }
}

TEST(UnitaryFromFamilyTest, DirectSumOfRankOneMaps) {
    PartialIsometryRep a;
    a.v = ComplexMatrix::Zero(2, 1);
    a.v(0, 0) = 1.0;
    a.k = a.v * a.v.adjoint();
    a.l = ComplexMatrix::Identity(1, 1);
    PartialIsometryRep b = a;
    b.v = ComplexMatrix::Zero(2, 1);
    b.v(1, 0) = 1.0;
    b.k = b.v * b.v.adjoint();
    const ComplexMatrix u = unitary_from_family({a, b}, DomainMode::direct_sum);
    EXPECT_EQ(u, ComplexMatrix::Identity(2, 2));
}

TEST(UnitaryFromFamilyTest, MissingProjectorIsIncomplete) {
    std::mt19937_64 rng(8);
    const ComplexMatrix u = random_unitary(rng, 3);
    EXPECT_EQ(kind_of([&] { unitary_from_family({member_from_columns(u, {0, 1})}); }),
              ErrorKind::IncompleteFamily);
    EXPECT_EQ(kind_of([&] {
                  unitary_from_family({member_from_columns(u, {0, 1}), member_from_columns(u, {1, 2})});
              }),
              ErrorKind::IncompleteFamily);
}

TEST(CyclicTest, TrivialFamily) {
    const CyclicResult r = cyclic_structure({ComplexMatrix::Identity(2, 2)});
    EXPECT_TRUE(r.order_ok);
    EXPECT_EQ(r.generator, ComplexMatrix::Identity(2, 2));
}

TEST(CyclicTest, TwoColumnsGiveSwap) {
    const ComplexMatrix e = ComplexMatrix::Identity(2, 2);
    const CyclicResult r = cyclic_structure({e.col(0), e.col(1)});
    ComplexMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    EXPECT_EQ(r.generator, swap);
    EXPECT_EQ(r.generator * r.generator, e);
}

TEST(CyclicTest, BlockPermutation) {
    const ComplexMatrix e = ComplexMatrix::Identity(4, 4);
    const CyclicResult r = cyclic_structure({e.leftCols(2), e.rightCols(2)});
    EXPECT_EQ(r.generator.topRightCorner(2, 2), ComplexMatrix::Identity(2, 2));
    EXPECT_EQ(r.generator.bottomLeftCorner(2, 2), ComplexMatrix::Identity(2, 2));
    EXPECT_EQ(r.power_residual, 0.0);
}

TEST(CyclicTest, ExactFamiliesHaveZeroResidual) {
    std::mt19937_64 rng(42);
    for (int k = 1; k <= 6; ++k) {
        for (int d = 1; d <= 3; ++d) {
            const CyclicResult r = cyclic_structure(exact_semi_unitary_family(rng, k, d));
            EXPECT_EQ(r.power_residual, 0.0) << k << " " << d;
            EXPECT_EQ(r.shift_residual, 0.0) << k << " " << d;
            EXPECT_TRUE(r.order_ok);
        }
    }
}

TEST(CyclicTest, HaarFamiliesWithinTolerance) {
    std::mt19937_64 rng(43);
    for (int k = 2; k <= 6; ++k) {
        const CyclicResult r = cyclic_structure(random_semi_unitary_family(rng, k, 2));
        EXPECT_TRUE(r.order_ok);
        EXPECT_LT(r.power_residual, 1e-12);
    }
}

TEST(CyclicTest, NonIsometryRejected) {
    ComplexMatrix s = ComplexMatrix::Zero(2, 1);
    s(0, 0) = 2.0;
    ComplexMatrix t = ComplexMatrix::Zero(2, 1);
    t(1, 0) = 1.0;
    EXPECT_EQ(kind_of([&] { cyclic_structure({s, t}); }), ErrorKind::NotSemiUnitary);
    EXPECT_EQ(kind_of([&] { cyclic_structure({t, t}); }), ErrorKind::NotSemiUnitary);
}

TEST(BlockOperatorTest, LabelsAndExtraction) {
    const BlockOperator j = number_family(4, 2);
    EXPECT_EQ(j.labels(), discretized_labels(2));
    EXPECT_EQ(j.labels().size(), 4U);
    EXPECT_EQ(*kappa_extract(j, {1, Rational(0)}).exact_diagonal(), *number_op(4).exact_diagonal());
    EXPECT_EQ(kind_of([&] { j.block({1, Rational(1)}); }), ErrorKind::UnknownLabel);
    const auto minus = j.block({-1, Rational(1, 2)}).exact_diagonal()->values;
    EXPECT_EQ(minus, (std::vector<Rational>{Rational(-1, 2), Rational(-3, 2), Rational(-5, 2), Rational(-7, 2)}));
}

TEST(BlockOperatorTest, IotaKappaRoundTrip) {
    const FockOperator n = number_op(5);
    const auto labels = discretized_labels(3);
    const SeriesAction identity = polynomial_action({Rational(0), Rational(1)});
    EXPECT_EQ(*kappa_extract(iota_embed(identity, n, labels), {1, Rational(0)}).exact_diagonal(),
              *n.exact_diagonal());
    const SeriesAction square = polynomial_action({Rational(0), Rational(0), Rational(1)});
    const BlockOperator squared = iota_embed(square, number_family(5, 3));
    EXPECT_EQ(*kappa_extract(squared, {1, Rational(0)}).exact_diagonal(),
              *n.compose(n).exact_diagonal());
    // Blockwise: the (-1, 1/3) block of J_n^2 is (n + 1/3)^2.
    const auto block = kappa_extract(squared, {-1, Rational(1, 3)}).exact_diagonal()->values;
    for (int m = 0; m < 5; ++m) {
        const Rational v = Rational(m) + Rational(1, 3);
        EXPECT_EQ(block[static_cast<std::size_t>(m)], v * v);
    }
}

TEST(RationalMatrixTest, ProductAndPermutation) {
    RationalMatrix p(2, 2);
    p.set(0, 1, Rational(1));
    p.set(1, 0, Rational(1));
    EXPECT_TRUE(p.is_permutation());
    EXPECT_EQ(p * p, RationalMatrix::identity(2));
    const RationalMatrix d = RationalMatrix::diagonal({Rational(1, 2), Rational(3)});
    const RationalMatrix swapped = p * d * p.adjoint();
    EXPECT_EQ(swapped.at(0, 0), Rational(3));
    EXPECT_EQ(swapped.at(1, 1), Rational(1, 2));
    EXPECT_EQ(swapped.max_abs_diff(d), Rational(5, 2));
    EXPECT_FALSE(d.is_permutation());
}

// Oracle: enumerate block eigenvalues and grid values independently.
RationalMatrix expected_unitary(int d, int g) {
    std::vector<Rational> block_values;
    for (int k = 0; k < g; ++k) {
        for (int m = 0; m < d; ++m) {
            block_values.push_back(Rational(m) + Rational(k, g));
        }
    }
    for (int k = 1; k <= g; ++k) {
        for (int m = 0; m < d; ++m) {
            block_values.push_back(-(Rational(m) + Rational(k, g)));
        }
    }
    const std::int64_t total = 2LL * d * g;
    RationalMatrix u(total, total);
    for (std::int64_t row = 0; row < total; ++row) {
        for (std::int64_t col = 0; col < total; ++col) {
            if (Rational(col - d * g, g) == block_values[static_cast<std::size_t>(row)]) {
                u.set(row, col, Rational(1));
            }
        }
    }
    return u;
}

TEST(Alg1Test, SmallestCase) {
    const Alg1Result r = alg1_pipeline(1, 1);
    EXPECT_EQ(r.labels, (std::vector<BlockLabel>{{1, Rational(0)}, {-1, Rational(1)}}));
    EXPECT_EQ(r.p_disc, RationalMatrix::diagonal({Rational(-1), Rational(0)}));
    EXPECT_EQ(r.unitary.rows(), 2);
    EXPECT_TRUE(r.unitary_is_permutation);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.unitary, expected_unitary(1, 1));
}

TEST(Alg1Test, DTwoGOne) {
    const Alg1Result r = alg1_pipeline(2, 1);
    EXPECT_EQ(r.p_disc, RationalMatrix::diagonal({Rational(-2), Rational(-1), Rational(0), Rational(1)}));
    EXPECT_EQ(r.unitary, expected_unitary(2, 1));
    EXPECT_TRUE(r.pass());
}

class Alg1Sizes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Alg1Sizes, ExactIdentities) {
    const auto [d, g] = GetParam();
    const Alg1Result r = alg1_pipeline(d, g);
    EXPECT_TRUE(r.unitary_is_permutation);
    EXPECT_TRUE(r.family.union_ok);
    EXPECT_TRUE(r.family.disjoint_ok);
    for (const auto &[name, value] : r.residuals) {
        EXPECT_EQ(value, Rational(0)) << name;
    }
    EXPECT_EQ(r.unitary, expected_unitary(d, g));
    EXPECT_EQ(r.upsilon.rows(), d);
    EXPECT_EQ(r.upsilon.cols(), 2LL * d * g);
}

INSTANTIATE_TEST_SUITE_P(Grid, Alg1Sizes,
                         ::testing::Values(std::pair{2, 2}, std::pair{4, 3}, std::pair{8, 4}, std::pair{3, 5}));

TEST(Alg1Test, RejectsNonPositiveSizes) {
    EXPECT_EQ(kind_of([] { alg1_pipeline(0, 1); }), ErrorKind::InvalidDimension);
    EXPECT_EQ(kind_of([] { alg1_pipeline(1, 0); }), ErrorKind::InvalidDimension);
}

}  // namespace
}  // namespace cvcodes
