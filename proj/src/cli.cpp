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

#include "cvcodes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvcodes/bridge.hpp"
#include "cvcodes/comb.hpp"
#include "cvcodes/errors.hpp"
#include "cvcodes/fock.hpp"
#include "cvcodes/isometry.hpp"
#include "cvcodes/random.hpp"
#include "cvcodes/serialize.hpp"
#include "cvcodes/verify.hpp"

namespace cvcodes {

namespace {

constexpr int kMaxOrder = 64;
constexpr int kMaxDim = 4096;

/// Malformed input detected after parsing; maps to exit status 2.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family = "rot";
    int order = 1;
    int dim = 64;
    double eps = 0.0;
    std::string primitive = "ideal";
    std::string format = "json";
    std::string out_path;
    std::string suite;
    std::string code_path;
    std::vector<std::string> inject;
    std::optional<std::uint64_t> seed;
    double tol = 1e-9;
    double approx_tol = 5e-2;
    double detect_tol = 1e-6;
    int samples = 8;
    int trials = 20;
    int hadamard_dim = 256;
    int grid = 1;
};

void require_range(const char *name, long long value, long long lo, long long hi) {
    if (value < lo || value > hi) {
        throw BadInput(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "], got " + std::to_string(value));
    }
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw BadInput("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw BadInput("not a number: '" + s + "'");
    }
    return v;
}

int parse_int(const std::string &s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        throw BadInput("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw BadInput("not an integer: '" + s + "'");
    }
    return v;
}

Rational parse_rational(const std::string &s) {
    const auto parts = split(s, '/');
    if (parts.size() == 1) {
        return Rational(parse_int(parts[0]));
    }
    if (parts.size() == 2) {
        const int den = parse_int(parts[1]);
        if (den == 0) {
            throw BadInput("zero denominator in '" + s + "'");
        }
        return Rational(parse_int(parts[0]), den);
    }
    throw BadInput("not a rational: '" + s + "'");
}

// ---------------------------------------------------------------- bundles

struct PrimitiveSpec {
    enum class Kind { coherent, fock, ideal, window } kind = Kind::ideal;
    std::complex<double> alpha{0.0, 0.0};
    std::vector<int> levels;
    int half_width = 0;
};

PrimitiveSpec parse_primitive(const std::string &text) {
    PrimitiveSpec spec;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "ideal" && colon == std::string::npos) {
        spec.kind = PrimitiveSpec::Kind::ideal;
    } else if (head == "coherent" && !body.empty()) {
        spec.kind = PrimitiveSpec::Kind::coherent;
        const auto parts = split(body, ',');
        if (parts.size() > 2) {
            throw BadInput("coherent primitive takes coherent:re or coherent:re,im");
        }
        spec.alpha = {parse_double(parts[0]), parts.size() == 2 ? parse_double(parts[1]) : 0.0};
    } else if (head == "fock" && !body.empty()) {
        spec.kind = PrimitiveSpec::Kind::fock;
        for (const auto &p : split(body, ',')) {
            spec.levels.push_back(parse_int(p));
        }
    } else if (head == "window" && !body.empty()) {
        spec.kind = PrimitiveSpec::Kind::window;
        spec.half_width = parse_int(body);
        require_range("window half-width", spec.half_width, 0, 1 << 16);
    } else {
        throw BadInput("unknown primitive '" + text + "' (expected coherent:a[,b], fock:l1,l2,..., ideal, window:W)");
    }
    return spec;
}

Json bundle_header(const RunConfig &cfg) {
    return Json{{"tool_version", kToolVersion},
                {"kind", "code-bundle"},
                {"family", cfg.family},
                {"N", cfg.order},
                {"D", cfg.dim},
                {"eps", cfg.eps},
                {"primitive", cfg.primitive}};
}

Json build_rot_bundle(const RunConfig &cfg, const PrimitiveSpec &spec) {
    Json bundle = bundle_header(cfg);
    std::vector<FockVector> words;
    switch (spec.kind) {
        case PrimitiveSpec::Kind::ideal:
            for (int j = 0; j < 2; ++j) {
                words.push_back(approx_ideal_rot_codeword(cfg.order, j, cfg.dim, cfg.eps));
            }
            break;
        case PrimitiveSpec::Kind::coherent:
        case PrimitiveSpec::Kind::fock: {
            for (int level : spec.levels) {
                require_range("Fock level", level, 0, cfg.dim - 1);
            }
            const FockVector primitive = spec.kind == PrimitiveSpec::Kind::coherent
                                             ? FockVector::coherent(cfg.dim, spec.alpha)
                                             : FockVector::superposition(cfg.dim, spec.levels);
            for (int j = 0; j < 2; ++j) {
                words.push_back(rot_codeword_from_primitive(primitive, cfg.order, j));
            }
            break;
        }
        case PrimitiveSpec::Kind::window:
            throw BadInput("window primitives are only available for --family gkp");
    }
    bundle["ideal"] = spec.kind == PrimitiveSpec::Kind::ideal;
    bundle["codewords"] = Json::array({to_json(words[0]), to_json(words[1])});
    return bundle;
}

Json build_gkp_bundle(const RunConfig &cfg, const PrimitiveSpec &spec) {
    Json bundle = bundle_header(cfg);
    CombRepresentation rep = CombRepresentation::ideal();
    if (spec.kind == PrimitiveSpec::Kind::window) {
        rep = CombRepresentation::window(spec.half_width);
    } else if (spec.kind != PrimitiveSpec::Kind::ideal) {
        throw BadInput("gkp codes take --primitive ideal or window:W");
    }
    bundle["ideal"] = spec.kind == PrimitiveSpec::Kind::ideal;
    bundle["codewords"] = Json::array(
        {to_json(gkp_codeword(cfg.order, 0, rep)), to_json(gkp_codeword(cfg.order, 1, rep))});
    return bundle;
}

std::string bundle_markdown(const Json &bundle) {
    std::ostringstream out;
    out << "# " << bundle["family"].get<std::string>() << " code, N = " << bundle["N"].dump()
        << ", primitive " << bundle["primitive"].get<std::string>() << "\n\n";
    if (bundle["family"] == "rot") {
        out << "| codeword | level | amplitude |\n|---|---|---|\n";
        for (int j = 0; j < 2; ++j) {
            const FockVector v = fock_vector_from_json(bundle["codewords"][static_cast<std::size_t>(j)]);
            for (int m = 0; m < v.dim(); ++m) {
                if (std::abs(v[m]) > 1e-12) {
                    out << "| " << j << " | " << m << " | "
                        << format_number(Json(v[m].real())) << (v[m].imag() < 0 ? " - " : " + ")
                        << format_number(Json(std::abs(v[m].imag()))) << "i |\n";
                }
            }
        }
    } else {
        out << "| codeword | comb |\n|---|---|\n";
        for (int j = 0; j < 2; ++j) {
            out << "| " << j << " | `" << bundle["codewords"][static_cast<std::size_t>(j)].dump() << "` |\n";
        }
    }
    return out.str();
}

struct LoadedCode {
    std::string family;
    int order = 1;
    bool ideal = false;
    std::optional<CodePair> rot;
    std::vector<CombState> gkp;
};

LoadedCode load_code(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw BadInput("cannot open code bundle '" + path + "'");
    }
    Json bundle;
    try {
        bundle = Json::parse(in);
    } catch (const Json::exception &e) {
        throw BadInput("code bundle '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        LoadedCode code;
        code.family = bundle.at("family").get<std::string>();
        code.order = bundle.at("N").get<int>();
        code.ideal = bundle.at("ideal").get<bool>();
        require_range("N", code.order, 1, kMaxOrder);
        const Json &words = bundle.at("codewords");
        if (!words.is_array() || words.size() != 2) {
            throw BadInput("code bundle needs exactly two codewords");
        }
        if (code.family == "rot") {
            code.rot = CodePair{fock_vector_from_json(words[0]), fock_vector_from_json(words[1])};
            require_range("D", code.rot->at(0).dim(), 1, kMaxDim);
        } else if (code.family == "gkp") {
            code.gkp = {comb_state_from_json(words[0]), comb_state_from_json(words[1])};
        } else {
            throw BadInput("unknown code family '" + code.family + "'");
        }
        return code;
    } catch (const Json::exception &e) {
        throw BadInput("malformed code bundle '" + path + "': " + e.what());
    }
}

// ---------------------------------------------------------------- output

void emit(const std::string &text, const RunConfig &cfg, std::ostream &out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << text)) {
        throw BadInput("cannot write '" + cfg.out_path + "'");
    }
}

int emit_report(const Report &report, const std::string &title, const RunConfig &cfg, std::ostream &out,
                const std::string &extra_markdown = "") {
    if (cfg.format == "md") {
        emit(to_markdown(report, title) + extra_markdown, cfg, out);
    } else {
        emit(to_json(report).dump(2) + "\n", cfg, out);
    }
    return report.pass() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- build-code

int cmd_build_code(const RunConfig &cfg, std::ostream &out) {
    require_range("N", cfg.order, 1, kMaxOrder);
    require_range("D", cfg.dim, 1, kMaxDim);
    if (cfg.eps < 0.0) {
        throw BadInput("eps must be >= 0");
    }
    const PrimitiveSpec spec = parse_primitive(cfg.primitive);
    Json bundle;
    if (cfg.family == "rot") {
        bundle = build_rot_bundle(cfg, spec);
    } else {
        bundle = build_gkp_bundle(cfg, spec);
    }
    emit(cfg.format == "md" ? bundle_markdown(bundle) : bundle.dump(2) + "\n", cfg, out);
    return kExitPass;
}

// ---------------------------------------------------------------- check

Json check_config(const RunConfig &cfg) {
    Json inject = Json::array();
    for (const auto &i : cfg.inject) {
        inject.push_back(i);
    }
    Json j{{"command", "check"}, {"suite", cfg.suite}, {"code", cfg.code_path}, {"inject", std::move(inject)}};
    if (cfg.seed) {
        j["seed"] = *cfg.seed;
    }
    j["tol"] = cfg.tol;
    j["approx_tol"] = cfg.approx_tol;
    j["detect_tol"] = cfg.detect_tol;
    j["samples"] = cfg.samples;
    j["trials"] = cfg.trials;
    return j;
}

ReportEntry logical_entry(const std::string &name, const LogicalActionResult &r) {
    return {name, r.pass, Json{{"aligned_fidelity", r.aligned_fidelity}, {"global_phase", r.global_phase}}};
}

ReportEntry exact_entry(const std::string &name, const PhaseComparison &cmp, const Rational &expected) {
    const bool pass = cmp.equal && reduce_mod2(cmp.global_phase) == reduce_mod2(expected);
    return {name, pass,
            Json{{"equal_up_to_phase", cmp.equal},
                 {"global_phase_pi", to_string(reduce_mod2(cmp.global_phase))},
                 {"expected_phase_pi", to_string(reduce_mod2(expected))}}};
}

void logical_suite(const LoadedCode &code, const RunConfig &cfg, Report &report) {
    if (code.rot) {
        const CodePair &words = *code.rot;
        const int dim = words[0].dim();
        for (LogicalGate g : {LogicalGate::Z, LogicalGate::S, LogicalGate::T}) {
            report.results.push_back(logical_entry(
                std::string("logical ") + to_string(g),
                logical_action(rot_logical_op(g, code.order, dim), words, target_gate(g), cfg.tol)));
        }
        if (code.ideal) {
            for (LogicalGate g : {LogicalGate::X, LogicalGate::H}) {
                report.results.push_back(logical_entry(
                    std::string("logical ") + to_string(g) + " (truncated ideal code)",
                    logical_action(rot_logical_op(g, code.order, dim), words, target_gate(g), cfg.approx_tol)));
            }
        }
        return;
    }
    const int n = code.order;
    const auto &w = code.gkp;
    using K = GkpGate::Kind;
    const std::pair<K, Rational> diagonal[] = {{K::Z, Rational(1)}, {K::S, Rational(1, 2)}, {K::T, Rational(1, 4)}};
    for (const auto &[kind, phase1] : diagonal) {
        const GkpGate gate = GkpGate::of(kind);
        const char *name = kind == K::Z ? "Z" : kind == K::S ? "S" : "T";
        // Gate on |j> relative to |j>: phase 0 on |0>, phase1 on |1>.
        report.results.push_back(exact_entry(std::string("logical ") + name + " |0>",
                                             comb_equal_up_to_phase(gkp_apply(gate, w[0], n), w[0]), Rational(0)));
        report.results.push_back(exact_entry(std::string("logical ") + name + " |1>",
                                             comb_equal_up_to_phase(gkp_apply(gate, w[1], n), w[1]), phase1));
    }
    const GkpGate x = GkpGate::of(K::X);
    report.results.push_back(
        exact_entry("logical X |0> -> |1>", comb_equal_up_to_phase(gkp_apply(x, w[0], n), w[1]), Rational(0)));
    if (code.ideal) {
        report.results.push_back(
            exact_entry("logical X |1> -> |0>", comb_equal_up_to_phase(gkp_apply(x, w[1], n), w[0]), Rational(0)));
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const TwoModeComb in = TwoModeComb::tensor(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
                report.results.push_back(exact_entry(
                    "logical CZ |" + std::to_string(a) + std::to_string(b) + ">",
                    comb_equal_up_to_phase(gkp_apply_cz(in, n, n), in), Rational(a * b)));
            }
        }
    }
}

FockOperator injected_error(const std::string &name, int dim) {
    if (name.rfind("R:", 0) == 0) {
        return rotation_op_pi(parse_rational(name.substr(2)), dim);
    }
    if (name.rfind("Gamma", 0) == 0) {
        std::string digits = name.substr(5);
        bool dagger = false;
        if (digits.size() > 3 && digits.substr(digits.size() - 3) == "dag") {
            dagger = true;
            digits.resize(digits.size() - 3);
        }
        const int shift = parse_int(digits);
        require_range("injected shift", shift, 1, dim - 1);
        const FockOperator g = number_shift_op(shift, dim);
        return dagger ? g.adjoint() : g;
    }
    throw BadInput("unknown error '" + name + "' (expected GammaM, GammaMdag or R:p/q)");
}

void detect_suite(const LoadedCode &code, const RunConfig &cfg, Report &report) {
    if (code.rot) {
        const CodePair &words = *code.rot;
        const int dim = words[0].dim();
        if (dim <= code.order) {
            throw BadInput("detect suite needs D > N");
        }
        std::vector<ErrorGenerator> errors = map_error_generators(code.order, dim, code.ideal ? cfg.samples : 0);
        for (const auto &name : cfg.inject) {
            errors.push_back({name + " (injected)", injected_error(name, dim)});
        }
        const DetectabilityReport det = detectability_check(words, errors, cfg.detect_tol);
        for (const auto &e : det.entries) {
            report.results.push_back({"detect " + e.name, e.pass,
                                      Json{{"c_re", e.c.real()},
                                           {"c_im", e.c.imag()},
                                           {"off_diag_max", e.off_diag_max},
                                           {"diag_spread", e.diag_spread}}});
        }
        // Gamma_N: claimed detectable for every rotation code, but logical X
        // on the ideal one. Reported, never asserted.
        if (code.order < dim) {
            const DetectabilityReport gn = detectability_check(
                words, {ErrorGenerator{"Gamma_N", number_shift_op(code.order, dim)}}, cfg.detect_tol);
            const auto &e = gn.entries.front();
            report.results.push_back({"empirical Gamma_" + std::to_string(code.order) + " (informational)", true,
                                      Json{{"detectable", e.pass},
                                           {"off_diag_max", e.off_diag_max},
                                           {"diag_spread", e.diag_spread}}});
        }
        return;
    }
    if (!cfg.inject.empty()) {
        throw BadInput("--inject applies to rotation codes only");
    }
    // GKP: a momentum shift by l (0 < |l| < N) moves every codeword point off
    // the lattice N Z, so P E P = 0 exactly.
    const int n = code.order;
    for (int l = -(n - 1); l <= n - 1; ++l) {
        if (l == 0) {
            continue;
        }
        bool off_lattice = true;
        for (const auto &w : code.gkp) {
            const CombState shifted = gkp_apply(GkpGate::translate_p(Rational(l, n)), w, n);
            if (shifted.kind() == CombState::Kind::periodic) {
                off_lattice = off_lattice && !is_integer(shifted.offset() / Rational(n));
            } else {
                for (const auto &e : shifted.entries()) {
                    off_lattice = off_lattice && !is_integer(e.index / Rational(n));
                }
            }
        }
        report.results.push_back({"detect p-shift " + std::to_string(l), off_lattice,
                                  Json{{"support_off_code_lattice", off_lattice}}});
    }
}

void stabilizer_suite(const LoadedCode &code, const RunConfig &cfg, Report &report) {
    if (code.rot) {
        const CodePair &words = *code.rot;
        const int dim = words[0].dim();
        const double stab = stabilizer_deviation(rotation_op_pi(Rational(2, code.order), dim), words);
        report.results.push_back({"stabilizer R(2 pi / N)", stab <= cfg.tol, Json{{"deviation", stab}}});
        const double z = stabilizer_deviation(rotation_op_pi(Rational(1, code.order), dim), words);
        report.results.push_back(
            {"R(pi / N) is not a stabilizer", z > cfg.tol, Json{{"deviation", z}}});
        return;
    }
    const int n = code.order;
    for (int j = 0; j < 2; ++j) {
        const auto &w = code.gkp[static_cast<std::size_t>(j)];
        report.results.push_back(exact_entry("stabilizer q |" + std::to_string(j) + ">",
                                             comb_equal_up_to_phase(gkp_apply(GkpGate::of(GkpGate::Kind::stab_q), w, n), w),
                                             Rational(0)));
        if (code.ideal) {
            report.results.push_back(
                exact_entry("stabilizer p |" + std::to_string(j) + ">",
                            comb_equal_up_to_phase(gkp_apply(GkpGate::of(GkpGate::Kind::stab_p), w, n), w),
                            Rational(0)));
        }
    }
}

void isometry_suite(const RunConfig &cfg, Report &report) {
    if (!cfg.seed) {
        throw BadInput("the isometry suite is randomized and needs --seed");
    }
    require_range("trials", cfg.trials, 1, 10000);
    std::mt19937_64 rng(*cfg.seed);
    std::uniform_int_distribution<int> dim_dist(1, 12);
    double worst = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        const int dx = dim_dist(rng);
        const int dy = dim_dist(rng);
        std::uniform_int_distribution<int> shared_dist(0, std::min(dx, dy));
        const HermitianPair pair = random_hermitian_pair(rng, dx, dy, shared_dist(rng));
        const PartialIsometryRep rep = canonical_partial_isometry(pair.x, pair.y);
        worst = std::max(worst, partial_isometry_residuals(rep, pair.x, pair.y).max());
    }
    report.results.push_back({"canonical partial isometry", worst <= 1e-9,
                              Json{{"trials", cfg.trials}, {"max_residual", worst}}});
    for (int k = 1; k <= 6; ++k) {
        const CyclicResult c = cyclic_structure(exact_semi_unitary_family(rng, k, 2));
        report.results.push_back({"cyclic generator k=" + std::to_string(k),
                                  c.power_residual == 0.0 && c.shift_residual == 0.0,
                                  Json{{"power_residual", c.power_residual}, {"shift_residual", c.shift_residual}}});
    }
}

int cmd_check(const RunConfig &cfg, std::ostream &out) {
    Report report{kToolVersion, check_config(cfg), {}};
    if (cfg.suite == "isometry") {
        isometry_suite(cfg, report);
    } else {
        if (cfg.code_path.empty()) {
            throw BadInput("--code is required for the " + cfg.suite + " suite");
        }
        const LoadedCode code = load_code(cfg.code_path);
        if (cfg.suite == "logical") {
            logical_suite(code, cfg, report);
        } else if (cfg.suite == "detect") {
            detect_suite(code, cfg, report);
        } else {
            stabilizer_suite(code, cfg, report);
        }
    }
    return emit_report(report, "check: " + cfg.suite, cfg, out);
}

// ---------------------------------------------------------------- bridge

ConvergenceSeries hadamard_series(int order, int dim) {
    const FockOperator h = derive_logical_set(order, dim).h;
    return convergence_scan(
        [&](const ScanParam &p) {
            const CodePair words{approx_ideal_rot_codeword(order, 0, p.dim, p.eps),
                                 approx_ideal_rot_codeword(order, 1, p.dim, p.eps)};
            return logical_action(h, words, target_gate(LogicalGate::H), 0.0).aligned_fidelity;
        },
        {{dim, 1e-1}, {dim, 1e-2}, {dim, 1e-3}});
}

int cmd_bridge(const RunConfig &cfg, std::ostream &out) {
    require_range("N", cfg.order, 1, kMaxOrder);
    require_range("D", cfg.dim, 2 * cfg.order, kMaxDim);
    require_range("Hadamard D", cfg.hadamard_dim, 2 * cfg.order, kMaxDim);
    Report report{kToolVersion,
                  Json{{"command", "bridge"}, {"N", cfg.order}, {"D", cfg.dim}, {"hadamard_D", cfg.hadamard_dim}},
                  {}};
    const std::vector<BridgeRow> rows = bridge_table(cfg.order, cfg.dim);
    for (const auto &row : rows) {
        if (row.gate == LogicalGate::H) {
            continue;  // covered by the convergence series below
        }
        report.results.push_back({std::string("bridge ") + to_string(row.gate), row.exact_match,
                                  Json{{"exact_match", row.exact_match}, {"max_phase_diff", row.max_phase_diff}}});
    }
    const ConvergenceSeries series = hadamard_series(cfg.order, cfg.hadamard_dim);
    const double last = series.points.back().metric;
    Json metrics = Json::object();
    for (const auto &p : series.points) {
        char key[32];
        std::snprintf(key, sizeof key, "fidelity_eps_%g", p.param.eps);
        metrics[key] = p.metric;
    }
    metrics["nondecreasing"] = series.nondecreasing;
    report.results.push_back({"Hadamard series", series.nondecreasing && last >= 1.0 - 1e-3, std::move(metrics)});
    std::string extra;
    if (cfg.format == "md") {
        extra = "\n" + bridge_markdown(cfg.order, rows);
    }
    return emit_report(report, "bridge: N = " + std::to_string(cfg.order), cfg, out, extra);
}

// ---------------------------------------------------------------- alg1

int cmd_alg1(const RunConfig &cfg, std::ostream &out) {
    require_range("D", cfg.dim, 1, kMaxDim);
    require_range("G", cfg.grid, 1, kMaxDim);
    if (static_cast<long long>(cfg.dim) * cfg.grid > kMaxDim) {
        throw BadInput("alg1 needs D * G <= 4096");
    }
    const Alg1Result r = alg1_pipeline(cfg.dim, cfg.grid);
    Report report{kToolVersion, Json{{"command", "alg1"}, {"D", cfg.dim}, {"G", cfg.grid}}, {}};
    report.results.push_back({"index set size", true,
                              Json{{"labels", r.labels.size()}, {"total_dim", r.unitary.rows()}}});
    report.results.push_back({"U is a permutation", r.unitary_is_permutation, Json::object()});
    report.results.push_back(
        {"block spectra tile the grid", r.family.pass(),
         Json{{"union_ok", r.family.union_ok}, {"disjoint_ok", r.family.disjoint_ok}}});
    for (const auto &[name, value] : r.residuals) {
        report.results.push_back({name + " = 0", value == Rational(0), Json{{"residual", to_string(value)}}});
    }
    return emit_report(report, "alg1: D = " + std::to_string(cfg.dim) + ", G = " + std::to_string(cfg.grid), cfg,
                       out);
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Verification toolkit for rotation-symmetric and GKP bosonic codes", "cvcodes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Configuration file; subcommand options go in [subcommand] sections");
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    RunConfig cfg;
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "md"}));
        sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
    };

    CLI::App *build = app.add_subcommand("build-code", "Build the two codewords of a code");
    build->add_option("--family", cfg.family, "Code family")->required()->check(CLI::IsMember({"rot", "gkp"}));
    build->add_option("--N", cfg.order, "Rotation order N (1..64)")->required();
    build->add_option("--D", cfg.dim, "Fock truncation (rot only, <= 4096)");
    build->add_option("--primitive", cfg.primitive, "coherent:re[,im] | fock:l1,l2,... | ideal | window:W");
    build->add_option("--eps", cfg.eps, "Envelope for ideal rotation codewords");
    add_format(build);

    CLI::App *check = app.add_subcommand("check", "Run a verification suite on a code bundle");
    check->add_option("--suite", cfg.suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"logical", "detect", "stabilizer", "isometry"}));
    check->add_option("--code", cfg.code_path, "Code bundle written by build-code");
    check->add_option("--inject", cfg.inject, "Extra error: GammaM, GammaMdag or R:p/q (angle in units of pi)");
    check->add_option("--seed", cfg.seed, "Seed for randomized suites");
    check->add_option("--tol", cfg.tol, "Tolerance for exact-gate fidelities and stabilizers");
    check->add_option("--approx-tol", cfg.approx_tol, "Tolerance for gates on truncated ideal codes");
    check->add_option("--detect-tol", cfg.detect_tol, "Detectability tolerance");
    check->add_option("--samples", cfg.samples, "Rotation-error samples for ideal codes");
    check->add_option("--trials", cfg.trials, "Random trials for the isometry suite");
    add_format(check);

    CLI::App *bridge = app.add_subcommand("bridge", "Reproduce the rotation/GKP logical gate tables");
    bridge->add_option("--N", cfg.order, "Rotation order N")->required();
    bridge->add_option("--D", cfg.dim, "Fock truncation for the exact comparison");
    bridge->add_option("--hadamard-D", cfg.hadamard_dim, "Fock truncation for the Hadamard series");
    add_format(bridge);

    CLI::App *alg1 = app.add_subcommand("alg1", "Run the discretized number/momentum mapping pipeline");
    alg1->add_option("--D", cfg.dim, "Fock truncation")->required();
    alg1->add_option("--G", cfg.grid, "Grid resolution")->required();
    add_format(alg1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitPass : kExitBadInput;
    }

    try {
        if (build->parsed()) {
            return cmd_build_code(cfg, out);
        }
        if (check->parsed()) {
            return cmd_check(cfg, out);
        }
        if (bridge->parsed()) {
            return cmd_bridge(cfg, out);
        }
        return cmd_alg1(cfg, out);
    } catch (const BadInput &e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error &e) {
        err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitBadInput;
}

}  // namespace cvcodes
