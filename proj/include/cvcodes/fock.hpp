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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvcodes/rational.hpp"

// Truncated Fock-space objects: states over |0>..|D-1>, operators as D x D
// complex matrices, and the rotation-symmetric code constructions built on
// them.

namespace cvcodes {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class FockVector {
   public:
    /// When `normalized` is set the squared norm must be within 1e-12 of one.
    explicit FockVector(ComplexVector amplitudes, bool normalized = false);

    static FockVector basis(int dim, int level);
    /// Equal-weight superposition of the listed levels, normalized.
    static FockVector superposition(int dim, std::span<const int> levels);
    /// Coherent state alpha truncated to `dim` levels and renormalized.
    static FockVector coherent(int dim, std::complex<double> alpha);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const ComplexVector &amplitudes() const { return amplitudes_; }
    std::complex<double> operator[](int level) const { return amplitudes_(level); }
    bool is_normalized() const { return normalized_; }
    double norm() const { return amplitudes_.norm(); }

    /// Throws ZeroProjection when the norm is below 1e-12.
    FockVector normalized() const;

   private:
    ComplexVector amplitudes_;
    bool normalized_;
};

struct Structure {
    enum class Kind { diagonal, lower_shift, upper_shift, dense };

    Kind kind = Kind::dense;
    /// Offset of the populated band for the shift kinds. upper_shift(m) has
    /// entries only at (r, r + m), lower_shift(m) only at (r + m, r).
    int shift = 0;

    static Structure diagonal() { return {Kind::diagonal, 0}; }
    static Structure upper(int m) { return {Kind::upper_shift, m}; }
    static Structure lower(int m) { return {Kind::lower_shift, m}; }
    static Structure dense() { return {Kind::dense, 0}; }

    friend bool operator==(const Structure &, const Structure &) = default;
};

std::string to_string(const Structure &s);

/// Exact description of a diagonal operator. `plain` stores the entries
/// themselves; `pi_phase` stores r with entry e^{i pi r}, reduced mod 2.
struct ExactDiagonal {
    enum class Unit { plain, pi_phase };

    Unit unit = Unit::plain;
    std::vector<Rational> values;

    friend bool operator==(const ExactDiagonal &, const ExactDiagonal &) = default;
};

class FockOperator {
   public:
    /// Validates that the sparsity of `entries` fits `structure`.
    FockOperator(ComplexMatrix entries, Structure structure);
    /// Materializes the matrix from the exact diagonal.
    explicit FockOperator(ExactDiagonal exact);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix &entries() const { return entries_; }
    const Structure &structure() const { return structure_; }
    const std::optional<ExactDiagonal> &exact_diagonal() const { return exact_; }

    FockVector apply(const FockVector &v) const;
    FockOperator adjoint() const;
    /// this * rhs. Exact diagonals of the same unit compose exactly.
    FockOperator compose(const FockOperator &rhs) const;
    FockOperator power(int exponent) const;

    bool is_unitary(double tol = 1e-12) const;

   private:
    ComplexMatrix entries_;
    Structure structure_;
    std::optional<ExactDiagonal> exact_;
};

/// Operator on the product of two truncated modes, lexicographic basis
/// |m> (x) |m'> -> index m * dim2 + m'.
class TwoModeOperator {
   public:
    TwoModeOperator(int dim1, int dim2, ComplexMatrix entries,
                    std::optional<std::vector<Rational>> exact_phases = std::nullopt);

    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }
    const ComplexMatrix &entries() const { return entries_; }
    const std::optional<std::vector<Rational>> &exact_phases() const { return exact_phases_; }

    /// Exact phase (units of pi) on |m> (x) |m'>; requires exact phases.
    Rational phase_at(int m, int m2) const;

    ComplexVector apply_product(const FockVector &a, const FockVector &b) const;

   private:
    int dim1_;
    int dim2_;
    ComplexMatrix entries_;
    std::optional<std::vector<Rational>> exact_phases_;
};

ComplexVector kron(const FockVector &a, const FockVector &b);

enum class OperatorKind { number, annihilation, rotation, number_shift };

struct OperatorSpec {
    OperatorKind kind = OperatorKind::number;
    /// rotation angle for `rotation`
    double theta = 0.0;
    /// m for `number_shift`
    int shift = 0;
};

FockOperator fock_operator(const OperatorSpec &spec, int dim);
FockOperator number_op(int dim);
FockOperator annihilation_op(int dim);
/// R_theta = diag(e^{i theta m}).
FockOperator rotation_op(double theta, int dim);
/// R_theta with theta = pi * angle_over_pi; phases kept exact.
FockOperator rotation_op_pi(const Rational &angle_over_pi, int dim);
/// Gamma_m = sum_l |l><l+m|.
FockOperator number_shift_op(int shift, int dim);

struct ProjectorResult {
    FockOperator projector;
    std::vector<int> selected;
    bool empty = false;
};

/// Diagonal projector onto the generator eigenvalues mu with
/// mu = (2k + parity) * pi / s_Z for some integer k, where
/// s_Z = pi * z_angle_over_pi is the logical-Z angle. Exact test.
ProjectorResult u_invariant_projector(std::span<const Rational> generator_spectrum,
                                      const Rational &z_angle_over_pi, int parity);

/// Normalized Pi^j |primitive>. Computed both as the 2N-term rotation sum and
/// by index selection; the two are cross-checked to 1e-12.
FockVector rot_codeword_from_primitive(const FockVector &primitive, int order, int parity);

/// True iff the primitive has support on some |kN> with k even and some with
/// k odd.
bool rot_primitive_validity(const FockVector &primitive, int order);

enum class LogicalGate { Z, S, T, X, H };

const char *to_string(LogicalGate gate);

FockOperator rot_logical_op(LogicalGate gate, int order, int dim);

/// CROT_{NM} = exp(i pi / (N M) n (x) n).
TwoModeOperator crot(int order1, int order2, int dim1, int dim2);

/// Normalized sum_k e^{-eps (2k+j) N} |(2k+j) N> over the levels below dim.
FockVector approx_ideal_rot_codeword(int order, int parity, int dim, double eps);

}  // namespace cvcodes
