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

#include "cvcodes/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "cvcodes/errors.hpp"

namespace cvcodes {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorKind::InvalidArgument, "complex entries are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json phase_json(const Rational &r) {
    Json j = to_json(r);
    j["unit"] = "pi";
    return j;
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::InvalidArgument, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <typename T>
T number_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_integer()) {
        throw Error(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be an integer");
    }
    return v.get<T>();
}

const char *structure_name(Structure::Kind k) {
    switch (k) {
        case Structure::Kind::diagonal:
            return "diagonal";
        case Structure::Kind::lower_shift:
            return "lower_shift";
        case Structure::Kind::upper_shift:
            return "upper_shift";
        case Structure::Kind::dense:
            return "dense";
    }
    return "dense";
}

std::string escape_cell(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else {
            out += c;
        }
    }
    return out;
}

void flatten(const Json &j, const std::string &prefix, std::vector<std::string> &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_array()) {
        out.push_back(prefix + "=[" + std::to_string(j.size()) + " items]");
    } else {
        out.push_back(prefix + "=" + format_number(j));
    }
}

}  // namespace

Json to_json(const Rational &r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const Json &j) {
    const auto num = number_field<std::int64_t>(j, "num");
    const auto den = number_field<std::int64_t>(j, "den");
    if (den == 0) {
        throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    }
    return Rational(num, den);
}

Json to_json(const FockVector &v) {
    Json entries = Json::array();
    for (int m = 0; m < v.dim(); ++m) {
        entries.push_back(complex_json(v[m]));
    }
    return Json{{"dim", v.dim()}, {"normalized", v.is_normalized()}, {"entries", std::move(entries)}};
}

FockVector fock_vector_from_json(const Json &j) {
    const int dim = number_field<int>(j, "dim");
    const Json &entries = field(j, "entries");
    if (dim < 1 || !entries.is_array() || static_cast<int>(entries.size()) != dim) {
        throw Error(ErrorKind::InvalidDimension, "FockVector entries must match dim >= 1");
    }
    ComplexVector amps(dim);
    for (int m = 0; m < dim; ++m) {
        amps(m) = complex_from_json(entries[static_cast<std::size_t>(m)]);
    }
    const bool normalized = j.contains("normalized") && j.at("normalized").is_boolean() && j.at("normalized").get<bool>();
    return FockVector(std::move(amps), normalized);
}

Json to_json(const FockOperator &op) {
    Json entries = Json::array();
    for (int r = 0; r < op.dim(); ++r) {
        for (int c = 0; c < op.dim(); ++c) {
            entries.push_back(complex_json(op.entries()(r, c)));
        }
    }
    Json j{{"dim", op.dim()},
           {"structure", {{"kind", structure_name(op.structure().kind)}, {"shift", op.structure().shift}}},
           {"entries", std::move(entries)}};
    if (const auto &exact = op.exact_diagonal()) {
        Json values = Json::array();
        const bool pi = exact->unit == ExactDiagonal::Unit::pi_phase;
        for (const auto &v : exact->values) {
            values.push_back(pi ? phase_json(v) : to_json(v));
        }
        j["exact"] = {{"unit", pi ? "pi_phase" : "plain"}, {"values", std::move(values)}};
    }
    return j;
}

Json to_json(const SqrtPiScaled &s) { return Json{{"sqrtPiExp", s.sqrt_pi_exp}, {"rational", to_json(s.coeff)}}; }

SqrtPiScaled sqrt_pi_scaled_from_json(const Json &j) {
    return {rational_from_json(field(j, "rational")), number_field<int>(j, "sqrtPiExp")};
}

Json to_json(const CombState &c) {
    Json j{{"unit", to_json(c.unit())}};
    if (c.kind() == CombState::Kind::finite) {
        j["kind"] = "finite";
        Json entries = Json::array();
        for (const auto &e : c.entries()) {
            entries.push_back(
                {{"index", to_json(e.index)}, {"magnitude", to_json(e.magnitude)}, {"phase", phase_json(e.phase)}});
        }
        j["entries"] = std::move(entries);
    } else {
        j["kind"] = "periodic";
        j["offset"] = to_json(c.offset());
        j["period"] = c.period();
        Json pattern = Json::array();
        for (const auto &p : c.pattern()) {
            pattern.push_back(phase_json(p));
        }
        j["pattern"] = std::move(pattern);
        j["magnitude"] = to_json(c.magnitude());
    }
    return j;
}

CombState comb_state_from_json(const Json &j) {
    const SqrtPiScaled unit = sqrt_pi_scaled_from_json(field(j, "unit"));
    const Json &kind = field(j, "kind");
    if (kind == "finite") {
        std::vector<CombEntry> entries;
        for (const auto &e : field(j, "entries")) {
            entries.push_back({rational_from_json(field(e, "index")), rational_from_json(field(e, "magnitude")),
                               rational_from_json(field(e, "phase"))});
        }
        return CombState::finite(unit, std::move(entries));
    }
    if (kind == "periodic") {
        std::vector<Rational> pattern;
        for (const auto &p : field(j, "pattern")) {
            pattern.push_back(rational_from_json(p));
        }
        return CombState::periodic(unit, rational_from_json(field(j, "offset")),
                                   number_field<std::int64_t>(j, "period"), std::move(pattern),
                                   rational_from_json(field(j, "magnitude")));
    }
    throw Error(ErrorKind::InvalidArgument, "comb kind must be 'finite' or 'periodic'");
}

Json to_json(const DetectabilityReport &r) {
    Json errors = Json::array();
    for (const auto &e : r.entries) {
        errors.push_back({{"name", e.name},
                          {"c", complex_json(e.c)},
                          {"off_diag_max", e.off_diag_max},
                          {"diag_spread", e.diag_spread},
                          {"pass", e.pass}});
    }
    return Json{{"tol", r.tol},
                {"pass", r.pass},
                {"correctable", r.correctable},
                {"correctability_max", r.correctability_max},
                {"errors", std::move(errors)}};
}

Json to_json(const LogicalActionResult &r) {
    Json m = Json::array();
    for (int i = 0; i < 2; ++i) {
        m.push_back(Json::array({complex_json(r.matrix(i, 0)), complex_json(r.matrix(i, 1))}));
    }
    return Json{{"aligned_fidelity", r.aligned_fidelity},
                {"global_phase", r.global_phase},
                {"pass", r.pass},
                {"matrix", std::move(m)}};
}

Json to_json(const ConvergenceSeries &s) {
    Json points = Json::array();
    for (const auto &p : s.points) {
        points.push_back({{"D", p.param.dim}, {"eps", p.param.eps}, {"metric", p.metric}});
    }
    return Json{{"points", std::move(points)}, {"nondecreasing", s.nondecreasing}, {"nonincreasing", s.nonincreasing}};
}

Json to_json(const BridgeRow &row) {
    return Json{{"gate", to_string(row.gate)}, {"exact_match", row.exact_match}, {"max_phase_diff", row.max_phase_diff}};
}

Json to_json(const Alg1Result &r) {
    Json residuals = Json::object();
    for (const auto &[name, value] : r.residuals) {
        residuals[name] = to_json(value);
    }
    Json labels = Json::array();
    for (const auto &l : r.labels) {
        labels.push_back(to_string(l));
    }
    return Json{{"D", r.dim},
                {"G", r.grid},
                {"label_count", r.labels.size()},
                {"labels", std::move(labels)},
                {"total_dim", r.unitary.rows()},
                {"unitary_is_permutation", r.unitary_is_permutation},
                {"spectra_union_ok", r.family.union_ok},
                {"spectra_disjoint_ok", r.family.disjoint_ok},
                {"residuals", std::move(residuals)},
                {"pass", r.pass()}};
}

bool Report::pass() const {
    for (const auto &r : results) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

Json to_json(const Report &r) {
    Json results = Json::array();
    std::size_t passed = 0;
    for (const auto &e : r.results) {
        results.push_back({{"name", e.name}, {"pass", e.pass}, {"metrics", e.metrics}});
        passed += e.pass ? 1 : 0;
    }
    return Json{{"tool_version", r.tool_version},
                {"config", r.config},
                {"results", std::move(results)},
                {"summary",
                 {{"total", r.results.size()},
                  {"passed", passed},
                  {"failed", r.results.size() - passed},
                  {"pass", r.pass()}}}};
}

std::string format_number(const Json &value) {
    if (value.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
        return buf;
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    return value.dump();
}

std::string to_markdown(const Report &r, const std::string &title) {
    std::ostringstream out;
    out << "# " << title << "\n\n";
    out << "| check | pass | metrics |\n|---|---|---|\n";
    for (const auto &e : r.results) {
        std::vector<std::string> parts;
        flatten(e.metrics, "", parts);
        std::string joined;
        for (const auto &p : parts) {
            joined += (joined.empty() ? "" : "; ") + p;
        }
        out << "| " << escape_cell(e.name) << " | " << (e.pass ? "yes" : "no") << " | " << escape_cell(joined)
            << " |\n";
    }
    out << "\n" << (r.pass() ? "All checks passed." : "Some checks failed.") << "\n";
    return out.str();
}

std::string bridge_markdown(int order, const std::vector<BridgeRow> &rows) {
    const std::string n = std::to_string(order);
    const std::string n2 = std::to_string(order * order);
    const std::string n4 = std::to_string(order * order * order * order);
    auto rotation_side = [&](LogicalGate g) -> std::string {
        switch (g) {
            case LogicalGate::Z:
                return "exp(i pi n / " + n + ")";
            case LogicalGate::S:
                return "exp(i pi n^2 / (2*" + n2 + "))";
            case LogicalGate::T:
                return "exp(i pi n^4 / (4*" + n4 + "))";
            case LogicalGate::X:
                return "(a sqrt(n))^" + n;
            case LogicalGate::H:
                return "(2 pi)^(-1/2) sum exp(-i pi m m' / " + n2 + ") |m><m'|";
        }
        return "";
    };
    auto gkp_side = [](LogicalGate g) -> std::string {
        switch (g) {
            case LogicalGate::Z:
                return "exp(-i lambda sqrt(pi) p)";
            case LogicalGate::S:
                return "exp(i lambda^2 p^2 / 2)";
            case LogicalGate::T:
                return "exp(i lambda^4 p^4 / (4 pi))";
            case LogicalGate::X:
                return "exp(i (sqrt(pi)/lambda) q)";
            case LogicalGate::H:
                return "exp(i pi/2 (lambda^2 p^2 + q^2/lambda^2))";
        }
        return "";
    };
    std::ostringstream out;
    out << "| gate | rotation code (N = " << n << ") | GKP code (lambda = -sqrt(pi)/" << n
        << ") | exact match | max diff | pass |\n|---|---|---|---|---|---|\n";
    for (const auto &row : rows) {
        char diff[64];
        std::snprintf(diff, sizeof diff, "%.17g", row.max_phase_diff);
        out << "| " << to_string(row.gate) << " | " << escape_cell(rotation_side(row.gate)) << " | "
            << escape_cell(gkp_side(row.gate)) << " | " << (row.exact_match ? "true" : "false") << " | " << diff
            << " | " << (row.exact_match ? "yes" : "no") << " |\n";
    }
    return out.str();
}

}  // namespace cvcodes
