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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "cvcodes/kernels.hpp"

namespace {

using cvcodes::kernels::Matrix;
using cvcodes::kernels::Vector;

Matrix random_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = {g(rng), g(rng)};
    }
    return m;
}

Vector random_vector(int n, unsigned seed) { return random_matrix(n, seed).col(0); }

template <Vector (*F)(const Matrix &, const Vector &)>
void BM_Matvec(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = random_matrix(n, 1);
    const Vector x = random_vector(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(a, x));
    }
}

template <Matrix (*F)(const Matrix &, const Matrix &)>
void BM_Matmul(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = random_matrix(n, 3);
    const Matrix b = random_matrix(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(a, b));
    }
}

template <std::complex<double> (*F)(const Vector &, const Matrix &, const Vector &)>
void BM_Bilinear(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = random_matrix(n, 5);
    const Vector u = random_vector(n, 6);
    const Vector v = random_vector(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(u, a, v));
    }
}

template <Vector (*F)(const Vector &, int, int)>
void BM_RotationProjector(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Vector amps = random_vector(n, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(amps, 8, 1));
    }
}

namespace serial = cvcodes::kernels::serial;
namespace parallel = cvcodes::kernels::parallel;

BENCHMARK(BM_Matvec<serial::matvec>)->Name("matvec/serial")->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_Matvec<parallel::matvec>)->Name("matvec/parallel")->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_Matmul<serial::matmul>)->Name("matmul/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Matmul<parallel::matmul>)->Name("matmul/parallel")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Bilinear<serial::bilinear>)->Name("bilinear/serial")->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_Bilinear<parallel::bilinear>)->Name("bilinear/parallel")->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_RotationProjector<serial::rotation_projector_apply>)
    ->Name("rotation_projector/serial")
    ->Arg(256)
    ->Arg(4096);
BENCHMARK(BM_RotationProjector<parallel::rotation_projector_apply>)
    ->Name("rotation_projector/parallel")
    ->Arg(256)
    ->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
