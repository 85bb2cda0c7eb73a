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

#include "cvcodes/rational.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cvcodes/errors.hpp"

namespace cvcodes {

Rational reduce_mod2(const Rational &r) {
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();
    const std::int64_t period = 2 * den;
    std::int64_t rem = num % period;
    if (rem < 0) {
        rem += period;
    }
    return Rational(rem, den);
}

std::complex<double> pi_phase_to_complex(const Rational &r) {
    const Rational reduced = reduce_mod2(r);
    if (reduced == Rational(0)) {
        return {1.0, 0.0};
    }
    if (reduced == Rational(1, 2)) {
        return {0.0, 1.0};
    }
    if (reduced == Rational(1)) {
        return {-1.0, 0.0};
    }
    if (reduced == Rational(3, 2)) {
        return {0.0, -1.0};
    }
    const double angle = std::numbers::pi * to_double(reduced);
    return {std::cos(angle), std::sin(angle)};
}

double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool is_integer(const Rational &r) { return r.denominator() == 1; }

std::int64_t as_integer(const Rational &r) {
    if (!is_integer(r)) {
        throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + to_string(r));
    }
    return r.numerator();
}

Rational rational_pow(const Rational &r, int exponent) {
    Rational out(1);
    for (int i = 0; i < exponent; ++i) {
        out *= r;
    }
    return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> low;
    std::vector<std::int64_t> high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d) {
                high.push_back(n / d);
            }
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace cvcodes
