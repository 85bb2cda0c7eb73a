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

#include "cvcodes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvcodes/errors.hpp"
#include "cvcodes/kernels.hpp"

namespace cvcodes {

namespace {

constexpr double kOrthonormalTol = 1e-10;

struct Deviation {
    std::complex<double> c;
    double off_diag;
    double spread;
};

Deviation deviation_of(const Eigen::Matrix2cd &m) {
    return {(m(0, 0) + m(1, 1)) / 2.0, std::max(std::abs(m(0, 1)), std::abs(m(1, 0))), std::abs(m(0, 0) - m(1, 1))};
}

/// Columns E|0>, E|1> for every error.
std::vector<std::array<ComplexVector, 2>> images(const CodePair &code, const std::vector<ErrorGenerator> &errors) {
    std::vector<std::array<ComplexVector, 2>> out(errors.size());
    for (std::size_t a = 0; a < errors.size(); ++a) {
        if (errors[a].op.dim() != code[0].dim()) {
            throw Error(ErrorKind::InvalidDimension, "error " + errors[a].name + " does not match the code dimension");
        }
        for (int j = 0; j < 2; ++j) {
            out[a][static_cast<std::size_t>(j)] =
                kernels::parallel::matvec(errors[a].op.entries(), code[static_cast<std::size_t>(j)].amplitudes());
        }
    }
    return out;
}

}  // namespace

void require_orthonormal(const CodePair &code) {
    if (code[0].dim() != code[1].dim()) {
        throw Error(ErrorKind::NonOrthonormalCodewords, "codewords have different dimensions");
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const std::complex<double> overlap =
                code[static_cast<std::size_t>(i)].amplitudes().dot(code[static_cast<std::size_t>(j)].amplitudes());
            if (std::abs(overlap - (i == j ? 1.0 : 0.0)) > kOrthonormalTol) {
                throw Error(ErrorKind::NonOrthonormalCodewords,
                            "codeword overlap <" + std::to_string(i) + "|" + std::to_string(j) +
                                "> deviates by " + std::to_string(std::abs(overlap - (i == j ? 1.0 : 0.0))));
            }
        }
    }
}

Eigen::Matrix2cd restricted_matrix(const FockOperator &op, const CodePair &code) {
    if (op.dim() != code[0].dim()) {
        throw Error(ErrorKind::InvalidDimension, "operator and codewords have different dimensions");
    }
    Eigen::Matrix2cd m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = kernels::parallel::bilinear(code[static_cast<std::size_t>(i)].amplitudes(), op.entries(),
                                                  code[static_cast<std::size_t>(j)].amplitudes());
        }
    }
    return m;
}

DetectabilityReport detectability_check(const CodePair &code, const std::vector<ErrorGenerator> &errors,
                                        double tol) {
    require_orthonormal(code);
    DetectabilityReport report;
    report.tol = tol;
    const auto cols = images(code, errors);

    report.pass = true;
    for (std::size_t a = 0; a < errors.size(); ++a) {
        Eigen::Matrix2cd m;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                m(i, j) = code[static_cast<std::size_t>(i)].amplitudes().dot(cols[a][static_cast<std::size_t>(j)]);
            }
        }
        const Deviation d = deviation_of(m);
        DetectabilityEntry entry{errors[a].name, d.c, d.off_diag, d.spread, std::max(d.off_diag, d.spread) <= tol};
        report.pass = report.pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }

    // <i| E_a^dagger E_b |j> = (E_a|i>)^dagger (E_b|j>).
    for (std::size_t a = 0; a < errors.size(); ++a) {
        for (std::size_t b = 0; b < errors.size(); ++b) {
            Eigen::Matrix2cd m;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    m(i, j) = cols[a][static_cast<std::size_t>(i)].dot(cols[b][static_cast<std::size_t>(j)]);
                }
            }
            const Deviation d = deviation_of(m);
            report.correctability_max = std::max({report.correctability_max, d.off_diag, d.spread});
        }
    }
    report.correctable = report.correctability_max <= tol;
    return report;
}

DetectabilityReport detectability_check(const CodePair &code, const std::vector<FockOperator> &errors, double tol) {
    std::vector<ErrorGenerator> named;
    for (std::size_t a = 0; a < errors.size(); ++a) {
        named.push_back({"E" + std::to_string(a), errors[a]});
    }
    return detectability_check(code, named, tol);
}

LogicalActionResult logical_action(const FockOperator &op, const CodePair &code, const Eigen::Matrix2cd &target,
                                   double tol) {
    require_orthonormal(code);
    LogicalActionResult result;
    result.matrix = restricted_matrix(op, code);
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(result.matrix);
    const double sigma = svd.singularValues()(0);
    result.normalized = sigma > 0.0 ? Eigen::Matrix2cd(result.matrix / sigma) : Eigen::Matrix2cd::Zero();
    const std::complex<double> overlap = (target.conjugate().array() * result.normalized.array()).sum();
    result.aligned_fidelity = std::abs(overlap) / 2.0;
    result.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
    result.pass = result.aligned_fidelity >= 1.0 - tol;
    return result;
}

double stabilizer_deviation(const FockOperator &op, const CodePair &code) {
    require_orthonormal(code);
    const Eigen::Matrix2cd m = restricted_matrix(op, code);
    const std::complex<double> trace = m.trace();
    const std::complex<double> align = std::abs(trace) > 0.0 ? std::conj(trace) / std::abs(trace) : 1.0;
    return (align * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

bool stabilizer_check(const FockOperator &op, const CodePair &code, double tol) {
    return stabilizer_deviation(op, code) <= tol;
}

Eigen::Matrix2cd target_gate(LogicalGate gate) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd t;
    switch (gate) {
        case LogicalGate::Z:
            t << 1.0, 0.0, 0.0, -1.0;
            break;
        case LogicalGate::S:
            t << 1.0, 0.0, 0.0, 1.0i;
            break;
        case LogicalGate::T:
            t << 1.0, 0.0, 0.0, std::exp(1.0i * (std::numbers::pi / 4.0));
            break;
        case LogicalGate::X:
            t << 0.0, 1.0, 1.0, 0.0;
            break;
        case LogicalGate::H:
            t << 1.0, 1.0, 1.0, -1.0;
            t /= std::numbers::sqrt2;
            break;
    }
    return t;
}

ConvergenceSeries convergence_scan(const ScanRecipe &recipe, const std::vector<ScanParam> &params, double slack) {
    if (params.empty()) {
        throw Error(ErrorKind::InvalidArgument, "convergence scan needs at least one parameter");
    }
    ConvergenceSeries series;
    series.slack = slack;
    for (const auto &p : params) {
        series.points.push_back({p, recipe(p)});
    }
    series.nondecreasing = true;
    series.nonincreasing = true;
    for (std::size_t i = 1; i < series.points.size(); ++i) {
        const double step = series.points[i].metric - series.points[i - 1].metric;
        series.nondecreasing = series.nondecreasing && step >= -slack;
        series.nonincreasing = series.nonincreasing && step <= slack;
    }
    return series;
}

}  // namespace cvcodes
