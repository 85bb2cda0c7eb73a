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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cvcodes/bridge.hpp"
#include "cvcodes/comb.hpp"
#include "cvcodes/fock.hpp"
#include "cvcodes/isometry.hpp"
#include "cvcodes/rational.hpp"
#include "cvcodes/verify.hpp"

// JSON and markdown renderings. Objects keep insertion order so that the
// same inputs always produce byte-identical text.

namespace cvcodes {

using Json = nlohmann::ordered_json;

Json to_json(const Rational &r);
/// {num, den}; InvalidArgument on anything else or a zero denominator.
Rational rational_from_json(const Json &j);

/// {dim, normalized, entries: [[re, im], ...]}
Json to_json(const FockVector &v);
FockVector fock_vector_from_json(const Json &j);

/// {dim, structure: {kind, shift}, entries: row-major [[re, im], ...]}, plus
/// `exact` ({unit, values}) when the operator carries an exact diagonal.
Json to_json(const FockOperator &op);

Json to_json(const SqrtPiScaled &s);
SqrtPiScaled sqrt_pi_scaled_from_json(const Json &j);

/// {unit, kind, entries: [{index, magnitude, phase}]} or
/// {unit, kind, offset, period, pattern, magnitude}. Phases carry unit "pi".
Json to_json(const CombState &c);
CombState comb_state_from_json(const Json &j);

Json to_json(const DetectabilityReport &r);
Json to_json(const LogicalActionResult &r);
Json to_json(const ConvergenceSeries &s);
Json to_json(const BridgeRow &row);
Json to_json(const Alg1Result &r);

struct ReportEntry {
    std::string name;
    bool pass = false;
    Json metrics = Json::object();
};

struct Report {
    std::string tool_version;
    Json config = Json::object();
    std::vector<ReportEntry> results;

    bool pass() const;
};

/// {tool_version, config, results: [{name, pass, metrics}], summary}
Json to_json(const Report &r);

/// One row per result with a pass column and the metrics flattened.
std::string to_markdown(const Report &r, const std::string &title);

/// Side-by-side table of logical gates for the order-N rotation code and
/// the matching GKP code, with exact-match and pass columns.
std::string bridge_markdown(int order, const std::vector<BridgeRow> &rows);

/// Renders a metric the same way everywhere: integers plainly, reals with
/// 17 significant digits.
std::string format_number(const Json &value);

}  // namespace cvcodes
