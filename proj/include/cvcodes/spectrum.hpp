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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvcodes/rational.hpp"

namespace cvcodes {

/// An interval of the real line with exact endpoints. A missing endpoint is
/// infinite (and therefore open).
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_open = false;
    bool hi_open = false;

    static Interval closed(const Rational &a, const Rational &b) { return {a, b, false, false}; }
    static Interval point(const Rational &a) { return {a, a, false, false}; }
    static Interval real_line() { return {std::nullopt, std::nullopt, true, true}; }

    bool empty() const;
    bool contains(const Rational &x) const;

    friend bool operator==(const Interval &, const Interval &) = default;
};

std::string to_string(const Interval &iv);

/// Pure-point part plus continuous part of a spectrum. Points are strictly
/// increasing, intervals are sorted and pairwise disjoint, and no point lies
/// inside an interval; InvalidSpectrum otherwise.
class SpectrumSpec {
   public:
    SpectrumSpec(std::vector<Rational> points, std::vector<Interval> intervals = {});

    const std::vector<Rational> &points() const { return points_; }
    const std::vector<Interval> &intervals() const { return intervals_; }

   private:
    std::vector<Rational> points_;
    std::vector<Interval> intervals_;
};

/// Finite union of intervals in normal form (sorted, disjoint, maximal).
class RealSet {
   public:
    RealSet() = default;
    explicit RealSet(std::vector<Interval> pieces);
    static RealSet of(const SpectrumSpec &spec);

    const std::vector<Interval> &pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    RealSet unite(const RealSet &other) const;
    RealSet intersect(const RealSet &other) const;

    friend bool operator==(const RealSet &, const RealSet &) = default;

   private:
    std::vector<Interval> pieces_;
};

std::string to_string(const RealSet &s);

struct FamilyReport {
    bool union_ok = false;
    bool disjoint_ok = false;
    /// Human-readable descriptions of what broke each condition.
    std::vector<std::string> witnesses;
    std::map<std::string, double> residuals;

    bool pass() const { return union_ok && disjoint_ok; }
};

/// Checks that the spectra of a family tile `target`: their union equals it
/// and their pairwise intersections are empty. Exact.
FamilyReport validate_spectrum_family(const std::vector<SpectrumSpec> &specs, const SpectrumSpec &target);

}  // namespace cvcodes
