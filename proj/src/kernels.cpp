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

#include "cvcodes/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cvcodes/rational.hpp"

namespace cvcodes::kernels {

namespace {

inline std::complex<double> row_dot(const Matrix &a, Eigen::Index row, const Vector &x) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        acc += a(row, c) * x(c);
    }
    return acc;
}

inline std::complex<double> matmul_entry(const Matrix &a, const Matrix &b, Eigen::Index r,
                                         Eigen::Index c) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        acc += a(r, k) * b(k, c);
    }
    return acc;
}

inline std::complex<double> projector_factor(Eigen::Index level, int order, int parity) {
    // phase of the m-th term, in units of pi: m * (parity + level / order)
    std::complex<double> acc{0.0, 0.0};
    for (int m = 0; m < 2 * order; ++m) {
        acc += pi_phase_to_complex(
            Rational(static_cast<std::int64_t>(m) * (parity * order + level), order));
    }
    return acc;
}

inline std::complex<double> dot_conj(const Vector &u, const Vector &w) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        acc += std::conj(u(i)) * w(i);
    }
    return acc;
}

}  // namespace

namespace serial {

Vector matvec(const Matrix &a, const Vector &x) {
    Vector out(a.rows());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        out(r) = row_dot(a, r, x);
    }
    return out;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows(), b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            out(r, c) = matmul_entry(a, b, r, c);
        }
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

std::complex<double> bilinear(const Vector &u, const Matrix &a, const Vector &v) {
    return dot_conj(u, matvec(a, v));
}

Vector rotation_projector_apply(const Vector &amps, int order, int parity) {
    Vector out(amps.size());
    for (Eigen::Index l = 0; l < amps.size(); ++l) {
        out(l) = amps(l) * projector_factor(l, order, parity);
    }
    return out;
}

}  // namespace serial

namespace parallel {

Vector matvec(const Matrix &a, const Vector &x) {
    Vector out(a.rows());
    const Eigen::Index rows = a.rows();
#pragma omp parallel for schedule(static)
    for (Eigen::Index r = 0; r < rows; ++r) {
        out(r) = row_dot(a, r, x);
    }
    return out;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows(), b.cols());
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = b.cols();
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            out(r, c) = matmul_entry(a, b, r, c);
        }
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    const Eigen::Index cols = a.cols();
    const Eigen::Index rows = a.rows();
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

std::complex<double> bilinear(const Vector &u, const Matrix &a, const Vector &v) {
    // The final dot stays serial so the summation order is fixed.
    return dot_conj(u, matvec(a, v));
}

Vector rotation_projector_apply(const Vector &amps, int order, int parity) {
    Vector out(amps.size());
    const Eigen::Index size = amps.size();
#pragma omp parallel for schedule(static)
    for (Eigen::Index l = 0; l < size; ++l) {
        out(l) = amps(l) * projector_factor(l, order, parity);
    }
    return out;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace cvcodes::kernels
