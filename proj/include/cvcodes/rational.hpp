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
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cvcodes {

using Rational = boost::rational<std::int64_t>;

/// Reduces a multiple of pi into the half-open range [0, 2).
Rational reduce_mod2(const Rational &r);

/// e^{i pi r}. Quarter turns are produced exactly.
std::complex<double> pi_phase_to_complex(const Rational &r);

double to_double(const Rational &r);

bool is_integer(const Rational &r);

/// The value must be an integer; throws InvalidArgument otherwise.
std::int64_t as_integer(const Rational &r);

Rational rational_pow(const Rational &r, int exponent);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

std::string to_string(const Rational &r);

/// A real number of the form coeff * (sqrt(pi))^sqrt_pi_exp. Used for comb
/// spacings and translation amounts so that "is this phase a rational
/// multiple of pi" is decidable.
struct SqrtPiScaled {
    Rational coeff{0};
    int sqrt_pi_exp = 0;

    friend bool operator==(const SqrtPiScaled &, const SqrtPiScaled &) = default;
};

/// Multiples of pi: pi itself is coeff * sqrt(pi)^2.
inline SqrtPiScaled times_pi(const Rational &r) { return {r, 2}; }

/// Sorted list of divisors of a positive integer.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace cvcodes
