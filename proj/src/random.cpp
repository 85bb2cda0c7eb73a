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

#include "cvcodes/random.hpp"

#include <algorithm>
#include <complex>
#include <numeric>

#include "cvcodes/errors.hpp"

namespace cvcodes {

namespace {

ComplexMatrix unitary_with_eigenvalues(std::mt19937_64 &rng, const std::vector<double> &values) {
    const int dim = static_cast<int>(values.size());
    const ComplexMatrix u = random_unitary(rng, dim);
    Eigen::VectorXd d(dim);
    for (int i = 0; i < dim; ++i) {
        d(i) = values[static_cast<std::size_t>(i)];
    }
    ComplexMatrix h = u * d.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    // Remove the rounding asymmetry so the matrix is exactly Hermitian.
    return (h + h.adjoint()) / 2.0;
}

std::vector<ComplexMatrix> column_blocks(const ComplexMatrix &w, int k, int d) {
    std::vector<ComplexMatrix> out;
    for (int i = 0; i < k; ++i) {
        out.push_back(w.middleCols(i * d, d));
    }
    return out;
}

void require_family_shape(int k, int d) {
    if (k < 1 || d < 1) {
        throw Error(ErrorKind::InvalidDimension, "family needs k >= 1 and d >= 1");
    }
}

}  // namespace

ComplexMatrix random_unitary(std::mt19937_64 &rng, int dim) {
    if (dim < 1) {
        throw Error(ErrorKind::InvalidDimension, "unitary dimension must be >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = {re, im};
        }
    }
    const Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const std::complex<double> rii = r(i, i);
        if (std::abs(rii) > 0.0) {
            q.col(i) *= rii / std::abs(rii);
        }
    }
    return q;
}

HermitianPair random_hermitian_pair(std::mt19937_64 &rng, int dim_x, int dim_y, int shared) {
    if (dim_x < 1 || dim_y < 1 || shared < 0 || shared > std::min(dim_x, dim_y)) {
        throw Error(ErrorKind::InvalidDimension, "need 0 <= shared <= min(dim_x, dim_y)");
    }
    // Jittered distinct half-integers: every gap is at least 0.3.
    const int needed = dim_x + dim_y - shared;
    std::vector<int> pool(static_cast<std::size_t>(4 * needed + 8));
    std::iota(pool.begin(), pool.end(), -static_cast<int>(pool.size()) / 2);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_real_distribution<double> jitter(-0.1, 0.1);
    std::vector<double> values;
    for (int i = 0; i < needed; ++i) {
        values.push_back(0.5 * pool[static_cast<std::size_t>(i)] + jitter(rng));
    }
    HermitianPair out;
    std::vector<double> xs(values.begin(), values.begin() + dim_x);
    std::vector<double> ys(values.begin(), values.begin() + shared);
    ys.insert(ys.end(), values.begin() + dim_x, values.end());
    out.shared.assign(values.begin(), values.begin() + shared);
    std::sort(out.shared.begin(), out.shared.end());
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    out.x = unitary_with_eigenvalues(rng, xs);
    out.y = unitary_with_eigenvalues(rng, ys);
    return out;
}

std::vector<ComplexMatrix> exact_semi_unitary_family(std::mt19937_64 &rng, int k, int d) {
    require_family_shape(k, d);
    const int n = k * d;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    static const std::complex<double> quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::uniform_int_distribution<int> phase(0, 3);
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        w(perm[static_cast<std::size_t>(c)], c) = quarter[phase(rng)];
    }
    return column_blocks(w, k, d);
}

std::vector<ComplexMatrix> random_semi_unitary_family(std::mt19937_64 &rng, int k, int d) {
    require_family_shape(k, d);
    return column_blocks(random_unitary(rng, k * d), k, d);
}

FockVector random_valid_primitive(std::mt19937_64 &rng, int order, int dim) {
    if (order < 1 || dim < 2 * order) {
        throw Error(ErrorKind::InvalidDimension, "random primitive needs N >= 1 and D >= 2N");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector amps(dim);
    for (int m = 0; m < dim; ++m) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        amps(m) = {re, im};
    }
    // Guarantee one even and one odd multiple of N with sizeable weight.
    amps(0) += 1.0;
    amps(order) += 1.0;
    amps /= amps.norm();
    return FockVector(std::move(amps), true);
}

}  // namespace cvcodes
