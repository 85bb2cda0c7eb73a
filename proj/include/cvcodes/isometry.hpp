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

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvcodes/fock.hpp"
#include "cvcodes/rational.hpp"
#include "cvcodes/spectrum.hpp"

namespace cvcodes {

struct IsometryResiduals {
    double vvdag_minus_k = 0.0;
    double vdagv_minus_l = 0.0;
    double vyvdag_minus_kxk = 0.0;
    double vdagxv_minus_lyl = 0.0;

    double max() const;
};

/// V maps Y's eigenvectors onto X's eigenvectors with matching eigenvalue.
/// K = V V^dagger lives on X's space, L = V^dagger V on Y's.
struct PartialIsometryRep {
    ComplexMatrix v;
    ComplexMatrix k;
    ComplexMatrix l;
    /// (eigenvalue of X, eigenvalue of Y) for every matched pair.
    std::vector<std::pair<double, double>> pairs;
    double match_tol = 0.0;
    /// No shared eigenvalue; v, k and l are zero.
    bool empty = false;
};

/// Canonical partial isometry between non-degenerate Hermitian X and Y.
/// Eigenvalues closer than 1e-8 raise DegenerateSpectrum. Each eigenvector is
/// rephased so that its largest-magnitude component is real and positive.
PartialIsometryRep canonical_partial_isometry(const ComplexMatrix &x, const ComplexMatrix &y,
                                              double match_tol = 1e-9);

IsometryResiduals partial_isometry_residuals(const PartialIsometryRep &rep, const ComplexMatrix &x,
                                             const ComplexMatrix &y);

/// `shared`: every member maps the same domain and U = sum of members.
/// `direct_sum`: each member has its own domain (its L must be the identity)
/// and U = [V_0 V_1 ...] acts on the direct sum of those domains.
enum class DomainMode { shared, direct_sum };

/// Requires sum K = 1, sum L = 1 and pairwise orthogonal projectors (1e-9);
/// IncompleteFamily otherwise. The result is unitary to 1e-8.
ComplexMatrix unitary_from_family(const std::vector<PartialIsometryRep> &family,
                                  DomainMode mode = DomainMode::shared);

struct CyclicResult {
    ComplexMatrix generator;
    bool order_ok = false;
    /// max |c^k - 1|
    double power_residual = 0.0;
    /// max over i of max |c S_i - S_{i+1}|
    double shift_residual = 0.0;
};

/// c = sum_i S_{i+1} S_i^dagger for k semi-unitaries of shape (k d) x d whose
/// ranges are orthogonal and complete; NotSemiUnitary otherwise.
CyclicResult cyclic_structure(const std::vector<ComplexMatrix> &semis);

/// Element (tau, nu) of the index family; tau is +1 or -1.
struct BlockLabel {
    int tau = 1;
    Rational nu{0};

    friend bool operator==(const BlockLabel &, const BlockLabel &) = default;
    friend bool operator<(const BlockLabel &a, const BlockLabel &b) {
        return a.tau != b.tau ? a.tau < b.tau : a.nu < b.nu;
    }
};

std::string to_string(const BlockLabel &label);

/// Direct sum of equally sized diagonal blocks, one per label, in label
/// insertion order.
class BlockOperator {
   public:
    BlockOperator() = default;
    BlockOperator(std::vector<BlockLabel> labels, std::vector<FockOperator> blocks);

    const std::vector<BlockLabel> &labels() const { return labels_; }
    const std::vector<FockOperator> &blocks() const { return blocks_; }
    int block_dim() const { return blocks_.front().dim(); }
    /// UnknownLabel if absent.
    const FockOperator &block(const BlockLabel &label) const;
    std::size_t position(const BlockLabel &label) const;

   private:
    std::vector<BlockLabel> labels_;
    std::vector<FockOperator> blocks_;
};

/// Labels {(+1, g/G): g = 0..G-1} u {(-1, g/G): g = 1..G}.
std::vector<BlockLabel> discretized_labels(int grid);

/// tau (A + nu 1); exact when A carries a plain exact diagonal.
FockOperator affine_member(const FockOperator &a, const BlockLabel &label);

/// J_n: blocks n_(tau, nu) = tau (diag(0..D-1) + nu) over the discretized labels.
BlockOperator number_family(int dim, int grid);

using SeriesAction = std::function<FockOperator(const FockOperator &)>;

/// Polynomial sum_i coeffs[i] A^i; exact on plain exact diagonals.
SeriesAction polynomial_action(std::vector<Rational> coeffs);

/// Applies f blockwise to a family.
BlockOperator iota_embed(const SeriesAction &f, const BlockOperator &family);
/// Builds the family tau (A + nu) over `labels` and applies f blockwise.
BlockOperator iota_embed(const SeriesAction &f, const FockOperator &a, const std::vector<BlockLabel> &labels);
FockOperator kappa_extract(const BlockOperator &op, const BlockLabel &label);

/// Sparse matrix with exact rational entries.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {}

    static RationalMatrix identity(std::int64_t n);
    static RationalMatrix diagonal(const std::vector<Rational> &values);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    const std::map<std::pair<std::int64_t, std::int64_t>, Rational> &entries() const { return entries_; }

    void set(std::int64_t r, std::int64_t c, const Rational &value);
    Rational at(std::int64_t r, std::int64_t c) const;

    RationalMatrix operator*(const RationalMatrix &rhs) const;
    /// Transpose; entries are real so this is the adjoint.
    RationalMatrix adjoint() const;
    /// Largest |a_ij - b_ij|, exact.
    Rational max_abs_diff(const RationalMatrix &other) const;
    /// 0/1 entries with exactly one 1 per row and per column.
    bool is_permutation() const;

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

   private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> entries_;
};

struct Alg1Result {
    int dim = 0;
    int grid = 0;
    std::vector<BlockLabel> labels;
    BlockOperator j_n;
    /// J_n as one (2 D G) x (2 D G) diagonal matrix.
    RationalMatrix j_n_matrix;
    /// diag(j / G) for j = -D G .. D G - 1.
    RationalMatrix p_disc;
    /// Permutation sending the grid basis to the block eigenbasis.
    RationalMatrix unitary;
    /// Extraction of the (+1, 0) block composed with `unitary`.
    RationalMatrix upsilon;
    FamilyReport family;
    /// Exact residuals, all zero on success.
    std::map<std::string, Rational> residuals;
    bool unitary_is_permutation = false;

    bool pass() const;
};

/// Discretized mapping pipeline between the number operator and a momentum
/// grid of spacing 1/G covering [-D, D).
Alg1Result alg1_pipeline(int dim, int grid);

}  // namespace cvcodes
