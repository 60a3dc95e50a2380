// swiptsec - secrecy performance of SWIPT downlinks over kappa-mu fading
// Copyright (C) 2026 the swiptsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swiptsec/config_io.hpp"

#include <cmath>
#include <limits>

namespace swiptsec::cli {

using nlohmann::json;

namespace {

double db2lin(double db) { return std::pow(10.0, db / 10.0); }

enum class Kind { Int, Real, Choice, OptInt };

struct FieldSpec {
    const char* key;     // dotted path
    Kind kind;
    double lo;           // inclusive unless lo_open
    double hi;           // inclusive
    bool lo_open;
};

// The single registry every entry point (file, --set, sweep) validates
// against. Ranges mirror the struct invariants.
const FieldSpec kFields[] = {
    {"L", Kind::Int, 1, 1e9, false},
    {"M", Kind::Int, 1, 1e9, false},
    {"N", Kind::Int, 1, 1e9, false},
    {"rho", Kind::Real, 0.0, 1.0, false},
    {"alpha", Kind::Real, 0.0, 1.0, false},
    {"R_s", Kind::Real, 0.0, 1e6, true},
    {"sigma2_over_N0", Kind::Real, 0.0, 1e12, false},
    {"gamma_s_db", Kind::Real, -200.0, 200.0, false},
    {"gamma_e_db", Kind::Real, -200.0, 200.0, false},
    {"pl_s_db", Kind::Real, 0.0, 200.0, false},
    {"pl_e_db", Kind::Real, 0.0, 200.0, false},
    {"kappa_s", Kind::Real, 0.0, 1e6, false},
    {"mu_s", Kind::Real, 0.0, 1e6, true},
    {"kappa_e", Kind::Real, 0.0, 1e6, false},
    {"mu_e", Kind::Real, 0.0, 1e6, true},
    {"mean_interpretation", Kind::Choice, 0, 0, false},
    {"numerics.rel_tol", Kind::Real, 0.0, 1e-3, true},
    {"numerics.max_terms", Kind::Int, 16, 1e9, false},
    {"numerics.quad_rel_tol", Kind::Real, 0.0, 1e-3, true},
    {"numerics.quad_abs_tol", Kind::Real, 0.0, 1e-3, true},
    {"numerics.tail_cutoff_sigma", Kind::Real, 0.0, 1000.0, true},
    {"numerics.fixed_terms", Kind::OptInt, 1, 1e9, false},
};

const FieldSpec* find_field(const std::string& path) {
    for (const auto& f : kFields)
        if (path == f.key) return &f;
    return nullptr;
}

json defaults() {
    return json{
        {"L", 1},
        {"M", 1},
        {"N", 1},
        {"rho", 0.8},
        {"alpha", 0.1},
        {"R_s", 1.0},
        {"sigma2_over_N0", 1.0},
        {"gamma_s_db", 10.0},
        {"gamma_e_db", 0.0},
        {"pl_s_db", 1.0},
        {"pl_e_db", 1.0},
        {"kappa_s", 1.0},
        {"mu_s", 1.0},
        {"kappa_e", 1.0},
        {"mu_e", 1.0},
        {"mean_interpretation", "per_branch_times_M"},
        {"numerics",
         {{"rel_tol", 1e-10},
          {"max_terms", 10000},
          {"quad_rel_tol", 1e-10},
          {"quad_abs_tol", 1e-13},
          {"tail_cutoff_sigma", 40.0},
          {"fixed_terms", nullptr}}},
    };
}

json* locate(json& doc, const std::string& path) {
    auto dot = path.find('.');
    if (dot == std::string::npos) {
        auto it = doc.find(path);
        return it == doc.end() ? nullptr : &*it;
    }
    auto head = path.substr(0, dot);
    auto it = doc.find(head);
    if (it == doc.end() || !it->is_object()) return nullptr;
    return locate(*it, path.substr(dot + 1));
}

void check_value(const FieldSpec& f, const json& v) {
    const std::string path = f.key;
    if (f.kind == Kind::Choice) {
        if (!v.is_string())
            throw ConfigError(path, "expected a string");
        std::string s = v.get<std::string>();
        if (s != "per_branch_times_M" && s != "combiner_output")
            throw ConfigError(path,
                              "must be \"per_branch_times_M\" or \"combiner_output\"");
        return;
    }
    if (f.kind == Kind::OptInt && v.is_null()) return;
    if (!v.is_number())
        throw ConfigError(path, "expected a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path, "must be finite");
    if (f.kind == Kind::Int || f.kind == Kind::OptInt) {
        if (x != std::floor(x))
            throw ConfigError(path, "must be an integer");
    }
    if (x < f.lo || (f.lo_open && x == f.lo) || x > f.hi) {
        std::string range = (f.lo_open ? "(" : "[") + std::to_string(f.lo) + ", " +
                            std::to_string(f.hi) + "]";
        throw ConfigError(path, "out of range " + range);
    }
}

void reject_unknown(const json& doc, const std::string& prefix) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (path == "numerics") {
            if (!it->is_object()) throw ConfigError(path, "expected an object");
            reject_unknown(*it, path);
            continue;
        }
        if (!find_field(path)) throw ConfigError(path, "unknown key");
    }
}

void derive(ResolvedConfig& cfg) {
    const json& d = cfg.doc;
    secrecy::SystemConfig s;
    s.L = d.at("L").get<int>();
    s.M = d.at("M").get<int>();
    s.N = d.at("N").get<int>();
    s.rho = d.at("rho").get<double>();
    s.alpha = d.at("alpha").get<double>();
    s.R_s = d.at("R_s").get<double>();
    s.sigma2_over_N0 = d.at("sigma2_over_N0").get<double>();
    s.PL_s = db2lin(d.at("pl_s_db").get<double>());
    s.PL_e = db2lin(d.at("pl_e_db").get<double>());
    s.main_branch = {d.at("kappa_s").get<double>(), d.at("mu_s").get<double>(),
                     db2lin(d.at("gamma_s_db").get<double>())};
    s.eaves = {d.at("kappa_e").get<double>(), d.at("mu_e").get<double>(),
               db2lin(d.at("gamma_e_db").get<double>())};
    s.mean_interpretation =
        d.at("mean_interpretation").get<std::string>() == "combiner_output"
            ? secrecy::MeanInterpretation::combiner_output
            : secrecy::MeanInterpretation::per_branch_times_M;

    const json& n = d.at("numerics");
    secrecy::NumericsConfig num;
    num.series_budget.rel_tol = n.at("rel_tol").get<double>();
    num.series_budget.max_terms = n.at("max_terms").get<int>();
    num.quad_rel_tol = n.at("quad_rel_tol").get<double>();
    num.quad_abs_tol = n.at("quad_abs_tol").get<double>();
    num.tail_cutoff_sigma = n.at("tail_cutoff_sigma").get<double>();
    num.fixed_terms = n.at("fixed_terms").is_null() ? 0 : n.at("fixed_terms").get<int>();

    s.validate();
    num.validate();
    cfg.system = s;
    cfg.numerics = num;
}

} // namespace

ResolvedConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("", "config document must be a JSON object");
    reject_unknown(doc, "");
    ResolvedConfig cfg;
    cfg.doc = defaults();
    // Validate and merge user values over the defaults.
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "numerics") {
            for (auto nit = it->begin(); nit != it->end(); ++nit) {
                std::string path = "numerics." + nit.key();
                check_value(*find_field(path), *nit);
                cfg.doc["numerics"][nit.key()] = *nit;
            }
            continue;
        }
        check_value(*find_field(it.key()), *it);
        cfg.doc[it.key()] = *it;
    }
    derive(cfg);
    return cfg;
}

ResolvedConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

void apply_value(ResolvedConfig& cfg, const std::string& path, const json& value) {
    const FieldSpec* f = find_field(path);
    if (!f) throw ConfigError(path, "unknown key");
    check_value(*f, value);
    json* slot = locate(cfg.doc, path);
    if (!slot) throw ConfigError(path, "unknown key");
    *slot = value;
    derive(cfg);
}

void apply_set(ResolvedConfig& cfg, const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("", "--set expects key=value, got \"" + assignment + "\"");
    std::string path = assignment.substr(0, eq);
    std::string text = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error&) {
        value = text; // bare strings (e.g. mean_interpretation values)
    }
    apply_value(cfg, path, value);
}

bool sweepable(const std::string& path) {
    const FieldSpec* f = find_field(path);
    return f && f->kind != Kind::Choice;
}

bool is_db_key(const std::string& path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, "_db") == 0;
}

std::string resolved_text(const ResolvedConfig& cfg) {
    return cfg.doc.dump();
}

} // namespace swiptsec::cli
