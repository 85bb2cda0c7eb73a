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

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvcodes/bridge.hpp"
#include "cvcodes/fock.hpp"

namespace cvcodes {

/// The two codewords |0> and |1>; must be orthonormal within 1e-10.
using CodePair = std::array<FockVector, 2>;

/// NonOrthonormalCodewords unless |<i|j> - delta_ij| <= 1e-10 and both share
/// one dimension.
void require_orthonormal(const CodePair &code);

/// <i|op|j> for i, j in {0, 1}.
Eigen::Matrix2cd restricted_matrix(const FockOperator &op, const CodePair &code);

struct DetectabilityEntry {
    std::string name;
    /// Mean of the restricted diagonal.
    std::complex<double> c{0.0, 0.0};
    double off_diag_max = 0.0;
    double diag_spread = 0.0;
    bool pass = false;
};

struct DetectabilityReport {
    std::vector<DetectabilityEntry> entries;
    double tol = 0.0;
    /// Every error satisfies P E P = c P within tol.
    bool pass = false;
    /// Largest deviation of P E_a^dagger E_b P from a multiple of P over all
    /// ordered pairs (a, b).
    double correctability_max = 0.0;
    /// The pairwise condition also holds within tol.
    bool correctable = false;
};

DetectabilityReport detectability_check(const CodePair &code, const std::vector<ErrorGenerator> &errors,
                                        double tol);
/// Unnamed errors are reported as E0, E1, ...
DetectabilityReport detectability_check(const CodePair &code, const std::vector<FockOperator> &errors, double tol);

struct LogicalActionResult {
    /// Raw restricted matrix <i|op|j>.
    Eigen::Matrix2cd matrix;
    /// Divided by its dominant singular value.
    Eigen::Matrix2cd normalized;
    /// |sum conj(T_ij) M_ij| / 2 on the normalized matrix.
    double aligned_fidelity = 0.0;
    /// arg of sum conj(T_ij) M_ij; dividing it out aligns M to T.
    double global_phase = 0.0;
    bool pass = false;
};

/// `pass` means aligned_fidelity >= 1 - tol.
LogicalActionResult logical_action(const FockOperator &op, const CodePair &code, const Eigen::Matrix2cd &target,
                                   double tol);

/// max |e^{-i phi} M - 1| with phi = arg tr M; 0 when op acts as a phase times
/// the identity on the code space.
double stabilizer_deviation(const FockOperator &op, const CodePair &code);
bool stabilizer_check(const FockOperator &op, const CodePair &code, double tol);

/// Standard single-qubit targets.
Eigen::Matrix2cd target_gate(LogicalGate gate);

struct ScanParam {
    int dim = 0;
    double eps = 0.0;
};

struct ScanPoint {
    ScanParam param;
    double metric = 0.0;
};

struct ConvergenceSeries {
    std::vector<ScanPoint> points;
    /// Monotonicity in input order, allowing `slack` of numerical noise.
    bool nondecreasing = false;
    bool nonincreasing = false;
    double slack = 0.0;
};

using ScanRecipe = std::function<double(const ScanParam &)>;

/// Evaluates the recipe at every parameter, in order. InvalidArgument when
/// params is empty.
ConvergenceSeries convergence_scan(const ScanRecipe &recipe, const std::vector<ScanParam> &params,
                                   double slack = 1e-12);

}  // namespace cvcodes
