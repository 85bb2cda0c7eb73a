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

#include "cvcodes/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "cvcodes/errors.hpp"

namespace cvcodes {

namespace {

// Lower endpoints: -inf first; at equal values a closed end starts earlier.
bool lower_before(const Interval &a, const Interval &b) {
    if (!a.lo || !b.lo) {
        return !a.lo && b.lo;
    }
    if (*a.lo != *b.lo) {
        return *a.lo < *b.lo;
    }
    return !a.lo_open && b.lo_open;
}

// Upper endpoints: +inf last; at equal values an open end stops earlier.
bool upper_before(const Interval &a, const Interval &b) {
    if (!a.hi || !b.hi) {
        return a.hi && !b.hi;
    }
    if (*a.hi != *b.hi) {
        return *a.hi < *b.hi;
    }
    return a.hi_open && !b.hi_open;
}

// Whether `next` (which starts no earlier than `cur`) overlaps or touches it.
bool joins(const Interval &cur, const Interval &next) {
    if (!cur.hi || !next.lo) {
        return true;
    }
    if (*next.lo < *cur.hi) {
        return true;
    }
    if (*next.lo == *cur.hi) {
        return !(next.lo_open && cur.hi_open);
    }
    return false;
}

}  // namespace

bool Interval::empty() const {
    if (!lo || !hi) {
        return false;
    }
    if (*lo > *hi) {
        return true;
    }
    return *lo == *hi && (lo_open || hi_open);
}

bool Interval::contains(const Rational &x) const {
    const bool above = !lo || (lo_open ? x > *lo : x >= *lo);
    const bool below = !hi || (hi_open ? x < *hi : x <= *hi);
    return above && below;
}

std::string to_string(const Interval &iv) {
    if (iv.lo && iv.hi && *iv.lo == *iv.hi && !iv.lo_open && !iv.hi_open) {
        return "{" + to_string(*iv.lo) + "}";
    }
    std::string out = iv.lo_open ? "(" : "[";
    out += iv.lo ? to_string(*iv.lo) : "-inf";
    out += ", ";
    out += iv.hi ? to_string(*iv.hi) : "inf";
    out += iv.hi_open ? ")" : "]";
    return out;
}

SpectrumSpec::SpectrumSpec(std::vector<Rational> points, std::vector<Interval> intervals)
    : points_(std::move(points)), intervals_(std::move(intervals)) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i - 1] < points_[i])) {
            throw Error(ErrorKind::InvalidSpectrum, "spectrum points must be strictly increasing");
        }
    }
    for (auto &iv : intervals_) {
        if (!iv.lo) {
            iv.lo_open = true;
        }
        if (!iv.hi) {
            iv.hi_open = true;
        }
        if (iv.empty()) {
            throw Error(ErrorKind::InvalidSpectrum, "empty interval " + to_string(iv));
        }
    }
    for (std::size_t i = 1; i < intervals_.size(); ++i) {
        const Interval &prev = intervals_[i - 1];
        const Interval &cur = intervals_[i];
        if (!lower_before(prev, cur)) {
            throw Error(ErrorKind::InvalidSpectrum, "spectrum intervals must be sorted");
        }
        Interval overlap{cur.lo, prev.hi, cur.lo_open, prev.hi_open};
        if (!prev.hi || !overlap.empty()) {
            throw Error(ErrorKind::InvalidSpectrum,
                        "intervals " + to_string(prev) + " and " + to_string(cur) + " overlap");
        }
    }
    for (const auto &p : points_) {
        for (const auto &iv : intervals_) {
            if (iv.contains(p)) {
                throw Error(ErrorKind::InvalidSpectrum,
                            "point " + to_string(p) + " lies inside continuous part " + to_string(iv));
            }
        }
    }
}

RealSet::RealSet(std::vector<Interval> pieces) {
    std::erase_if(pieces, [](const Interval &iv) { return iv.empty(); });
    for (auto &iv : pieces) {
        if (!iv.lo) {
            iv.lo_open = true;
        }
        if (!iv.hi) {
            iv.hi_open = true;
        }
    }
    std::sort(pieces.begin(), pieces.end(), lower_before);
    for (const auto &iv : pieces) {
        if (!pieces_.empty() && joins(pieces_.back(), iv)) {
            Interval &cur = pieces_.back();
            if (upper_before(cur, iv)) {
                cur.hi = iv.hi;
                cur.hi_open = iv.hi_open;
            }
        } else {
            pieces_.push_back(iv);
        }
    }
}

RealSet RealSet::of(const SpectrumSpec &spec) {
    std::vector<Interval> pieces = spec.intervals();
    for (const auto &p : spec.points()) {
        pieces.push_back(Interval::point(p));
    }
    return RealSet(std::move(pieces));
}

RealSet RealSet::unite(const RealSet &other) const {
    std::vector<Interval> pieces = pieces_;
    pieces.insert(pieces.end(), other.pieces_.begin(), other.pieces_.end());
    return RealSet(std::move(pieces));
}

RealSet RealSet::intersect(const RealSet &other) const {
    std::vector<Interval> out;
    for (const auto &a : pieces_) {
        for (const auto &b : other.pieces_) {
            Interval iv;
            const Interval &lo_src = lower_before(a, b) ? b : a;
            const Interval &hi_src = upper_before(a, b) ? a : b;
            iv.lo = lo_src.lo;
            iv.lo_open = lo_src.lo_open;
            iv.hi = hi_src.hi;
            iv.hi_open = hi_src.hi_open;
            if (!iv.empty()) {
                out.push_back(iv);
            }
        }
    }
    return RealSet(std::move(out));
}

std::string to_string(const RealSet &s) {
    if (s.empty()) {
        return "{}";
    }
    // Runs of isolated points print as one set.
    std::ostringstream out;
    bool first = true;
    bool in_points = false;
    for (const auto &iv : s.pieces()) {
        const bool is_point = iv.lo && iv.hi && *iv.lo == *iv.hi;
        if (is_point) {
            if (!in_points) {
                out << (first ? "" : " u ") << "{";
                in_points = true;
            } else {
                out << ", ";
            }
            out << to_string(*iv.lo);
        } else {
            if (in_points) {
                out << "}";
                in_points = false;
            }
            out << (first ? "" : " u ") << to_string(iv);
        }
        first = false;
    }
    if (in_points) {
        out << "}";
    }
    return out.str();
}

FamilyReport validate_spectrum_family(const std::vector<SpectrumSpec> &specs, const SpectrumSpec &target) {
    FamilyReport report;
    std::vector<RealSet> sets;
    sets.reserve(specs.size());
    RealSet all;
    for (const auto &spec : specs) {
        sets.push_back(RealSet::of(spec));
        all = all.unite(sets.back());
    }
    const RealSet goal = RealSet::of(target);
    report.union_ok = all == goal;
    if (!report.union_ok) {
        report.witnesses.push_back("union " + to_string(all) + " != target " + to_string(goal));
    }
    report.disjoint_ok = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const RealSet overlap = sets[i].intersect(sets[j]);
            if (!overlap.empty()) {
                report.disjoint_ok = false;
                report.witnesses.push_back("specs[" + std::to_string(i) + "] n specs[" + std::to_string(j) +
                                           "] = " + to_string(overlap));
            }
        }
    }
    return report;
}

}  // namespace cvcodes
