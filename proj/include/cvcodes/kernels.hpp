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

#include <Eigen/Dense>

// Dense complex kernels used on the hot paths of verification. Each kernel
// has a plain serial reference and an OpenMP version; the two are required
// to agree bit-for-bit (each output element is computed by the same scalar
// loop in both, only the distribution over threads differs).

namespace cvcodes::kernels {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace serial {

Vector matvec(const Matrix &a, const Vector &x);
Matrix matmul(const Matrix &a, const Matrix &b);
double max_abs_diff(const Matrix &a, const Matrix &b);
/// u^dagger A v
std::complex<double> bilinear(const Vector &u, const Matrix &a, const Vector &v);
/// Applies sum_{m=0}^{2N-1} ((-1)^j R_{pi/N})^m to a Fock-basis vector.
Vector rotation_projector_apply(const Vector &amps, int order, int parity);

}  // namespace serial

namespace parallel {

Vector matvec(const Matrix &a, const Vector &x);
Matrix matmul(const Matrix &a, const Matrix &b);
double max_abs_diff(const Matrix &a, const Matrix &b);
std::complex<double> bilinear(const Vector &u, const Matrix &a, const Vector &v);
Vector rotation_projector_apply(const Vector &amps, int order, int parity);

}  // namespace parallel

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace cvcodes::kernels
