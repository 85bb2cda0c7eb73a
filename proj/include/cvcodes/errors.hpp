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

#include <stdexcept>
#include <string>

namespace cvcodes {

enum class ErrorKind {
    InvalidArgument,
    InvalidDimension,
    ZeroProjection,
    UnitMismatch,
    NonRationalPhase,
    DegenerateSpectrum,
    IncompleteFamily,
    NotSemiUnitary,
    UnknownLabel,
    NonOrthonormalCodewords,
    InvalidSpectrum,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::InvalidDimension:
            return "InvalidDimension";
        case ErrorKind::ZeroProjection:
            return "ZeroProjection";
        case ErrorKind::UnitMismatch:
            return "UnitMismatch";
        case ErrorKind::NonRationalPhase:
            return "NonRationalPhase";
        case ErrorKind::DegenerateSpectrum:
            return "DegenerateSpectrum";
        case ErrorKind::IncompleteFamily:
            return "IncompleteFamily";
        case ErrorKind::NotSemiUnitary:
            return "NotSemiUnitary";
        case ErrorKind::UnknownLabel:
            return "UnknownLabel";
        case ErrorKind::NonOrthonormalCodewords:
            return "NonOrthonormalCodewords";
        case ErrorKind::InvalidSpectrum:
            return "InvalidSpectrum";
    }
    return "Unknown";
}

}  // namespace cvcodes
