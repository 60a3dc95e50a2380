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

#include "swiptsec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

namespace swiptsec::cli {

using nlohmann::json;

namespace {

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string method_name(secrecy::Method m) {
    return m == secrecy::Method::series ? "series" : "quadrature";
}

std::uint64_t row_seed(std::uint64_t seed, std::size_t row) {
    return seed + 0x632BE59BD9B4E019ull * (static_cast<std::uint64_t>(row) + 1);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

const std::vector<std::string> kOutputs = {"p_out_analytic", "p_eve", "p_t", "throughput",
                                           "p_out_mc"};

std::vector<std::string> normalize_outputs(std::vector<std::string> req, long long trials) {
    if (req.empty()) req = {"p_out_analytic", "p_t", "throughput"};
    for (const auto& o : req)
        if (std::find(kOutputs.begin(), kOutputs.end(), o) == kOutputs.end())
            throw ConfigError("outputs", "unknown output \"" + o + "\"");
    if (trials > 0 && std::find(req.begin(), req.end(), "p_out_mc") == req.end())
        req.push_back("p_out_mc");
    if (trials <= 0 && std::find(req.begin(), req.end(), "p_out_mc") != req.end())
        throw ConfigError("outputs", "p_out_mc requires --trials > 0");
    // Canonical order, duplicates dropped.
    std::vector<std::string> out;
    for (const auto& o : kOutputs)
        if (std::find(req.begin(), req.end(), o) != req.end()) out.push_back(o);
    return out;
}

struct RowTask {
    std::string label;     // figure curve, empty for plain sweeps
    double x = 0.0;        // swept value as given
    double x_linear = 0.0;
    ResolvedConfig cfg;
    std::uint64_t seed = 0;
};

// One evaluated row, already formatted. On evaluator failure every value
// cell holds "error".
std::vector<std::string> eval_row(const RowTask& task,
                                  const std::vector<std::string>& outputs,
                                  secrecy::Method method, long long trials,
                                  const mc::SimOptions& opts) {
    std::vector<std::string> cells;
    if (!task.label.empty()) cells.push_back(task.label);
    cells.push_back(fmt9(task.x));
    cells.push_back(fmt9(task.x_linear));
    try {
        bool need_outage = false;
        for (const auto& o : outputs)
            if (o == "p_out_analytic" || o == "p_eve") need_outage = true;
        secrecy::OutageResult res;
        if (need_outage) res = secrecy::secrecy_outage(task.cfg.system, task.cfg.numerics, method);
        double pt = 0.0, tau = 0.0;
        bool need_pt = false;
        for (const auto& o : outputs)
            if (o == "p_t" || o == "throughput") need_pt = true;
        if (need_pt) {
            pt = secrecy::transmission_probability(task.cfg.system, task.cfg.numerics);
            tau = task.cfg.system.R_s * pt;
        }
        for (const auto& o : outputs) {
            if (o == "p_out_analytic") cells.push_back(fmt9(res.p_out));
            else if (o == "p_eve") cells.push_back(fmt9(res.p_eve));
            else if (o == "p_t") cells.push_back(fmt9(pt));
            else if (o == "throughput") cells.push_back(fmt9(tau));
            else if (o == "p_out_mc") {
                auto est = mc::simulate_secrecy_outage(task.cfg.system, trials, task.seed, opts);
                cells.push_back(fmt9(est.p_hat));
                cells.push_back(fmt9(est.std_err));
            }
        }
        if (need_outage) {
            cells.push_back(method_name(res.method));
            cells.push_back(fmt9(res.quad_error_estimate));
            cells.push_back(std::to_string(res.terms_used_t));
            cells.push_back(std::to_string(res.terms_used_v));
        } else {
            cells.push_back(method_name(method));
            cells.push_back("0");
            cells.push_back("0");
            cells.push_back("0");
        }
    } catch (const std::exception&) {
        std::size_t fixed = task.label.empty() ? 2 : 3;
        cells.resize(fixed);
        std::size_t ncols = 0;
        for (const auto& o : outputs) ncols += (o == "p_out_mc") ? 2 : 1;
        ncols += 4; // diagnostics
        for (std::size_t i = 0; i < ncols; ++i) cells.push_back("error");
    }
    return cells;
}

std::string render(const std::vector<std::string>& comments,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> make_header(const std::string& label_col, const std::string& param,
                                     const std::vector<std::string>& outputs) {
    std::vector<std::string> h;
    if (!label_col.empty()) h.push_back(label_col);
    h.push_back(param);
    h.push_back(param + "_linear");
    for (const auto& o : outputs) {
        h.push_back(o);
        if (o == "p_out_mc") h.push_back("mc_stderr");
    }
    h.push_back("method");
    h.push_back("quad_error");
    h.push_back("terms_t");
    h.push_back("terms_v");
    return h;
}

std::string run_rows(const std::vector<std::string>& comments, const std::string& label_col,
                     const std::string& param, std::vector<RowTask> tasks,
                     const std::vector<std::string>& outputs, secrecy::Method method,
                     long long trials, const mc::SimOptions& opts) {
    std::vector<std::vector<std::string>> rows(tasks.size());
    parallel_for(tasks.size(), opts.workers, [&](std::size_t i) {
        rows[i] = eval_row(tasks[i], outputs, method, trials, opts);
    });
    return render(comments, make_header(label_col, param, outputs), rows);
}

struct Curve {
    std::string label;
    std::vector<std::pair<std::string, json>> pins;
};

struct FigurePreset {
    std::string param;
    std::vector<double> values;
    std::vector<std::string> outputs;
    std::vector<Curve> curves;
};

FigurePreset figure_preset(const std::string& name) {
    auto range = [](double a, double b, double step) {
        std::vector<double> v;
        for (double x = a; x <= b + 1e-9; x += step) v.push_back(x);
        return v;
    };
    if (name == "fig2") {
        FigurePreset p{"gamma_s_db", range(0, 20, 2), {"p_out_analytic"}, {}};
        struct Model { const char* tag; double kappa, mu; };
        for (Model m : {Model{"rayleigh", 0.0, 1.0}, Model{"rician_k1", 1.0, 1.0},
                        Model{"nakagami_m3", 0.0, 3.0}})
            for (double rs : {1.0, 2.0})
                p.curves.push_back({std::string(m.tag) + "_rs" + fmt9(rs),
                                    {{"kappa_s", m.kappa},
                                     {"mu_s", m.mu},
                                     {"kappa_e", m.kappa},
                                     {"mu_e", m.mu},
                                     {"R_s", rs}}});
        return p;
    }
    if (name == "fig3a") {
        FigurePreset p{"N", range(1, 8, 1), {"p_out_analytic"}, {}};
        for (double rho : {0.5, 0.8})
            for (int m : {1, 2})
                p.curves.push_back({"rho" + fmt9(rho) + "_M" + std::to_string(m),
                                    {{"rho", rho}, {"M", m}}});
        return p;
    }
    if (name == "fig3b") {
        FigurePreset p{"N", range(1, 8, 1), {"p_out_analytic"}, {}};
        for (double a : {0.1, 0.3, 0.5})
            p.curves.push_back({"alpha" + fmt9(a), {{"alpha", a}}});
        return p;
    }
    if (name == "fig4") {
        FigurePreset p{"L", range(1, 6, 1), {"p_out_analytic"}, {}};
        for (int n : {1, 3}) {
            p.curves.push_back({"ps_N" + std::to_string(n),
                                {{"alpha", 0.0}, {"rho", 0.8}, {"N", n}}});
            p.curves.push_back({"ts_N" + std::to_string(n),
                                {{"rho", 1.0}, {"alpha", 0.1}, {"N", n}}});
        }
        return p;
    }
    if (name == "fig5") {
        FigurePreset p{"R_s", range(0.25, 12, 0.25), {"throughput", "p_t"}, {}};
        for (int m : {1, 2})
            for (double g : {10.0, 15.0})
                p.curves.push_back({"M" + std::to_string(m) + "_g" + fmt9(g) + "db",
                                    {{"M", m}, {"gamma_s_db", g}}});
        return p;
    }
    throw ConfigError("preset", "unknown preset \"" + name + "\" (expected " +
                                    "fig2, fig3a, fig3b, fig4, or fig5)");
}

} // namespace

const std::vector<std::string>& allowed_outputs() { return kOutputs; }

std::vector<std::string> figure_preset_names() {
    return {"fig2", "fig3a", "fig3b", "fig4", "fig5"};
}

std::string run_sweep(const ResolvedConfig& base, const SweepSpec& spec,
                      secrecy::Method method, long long mc_trials, std::uint64_t seed,
                      const mc::SimOptions& opts) {
    if (!sweepable(spec.parameter))
        throw ConfigError(spec.parameter, "not a sweepable numeric parameter");
    if (spec.values.empty()) throw ConfigError("values", "sweep needs at least one value");
    auto outputs = normalize_outputs(spec.outputs, mc_trials);

    std::vector<RowTask> tasks;
    tasks.reserve(spec.values.size());
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        double v = spec.values[i];
        RowTask t;
        t.cfg = base;
        apply_value(t.cfg, spec.parameter, json(v)); // throws on bad value
        t.x = v;
        t.x_linear = is_db_key(spec.parameter) ? std::pow(10.0, v / 10.0) : v;
        t.seed = row_seed(seed, i);
        tasks.push_back(std::move(t));
    }

    std::ostringstream meta;
    meta << "sweep: parameter=" << spec.parameter << " method=" << method_name(method)
         << " trials=" << mc_trials << " seed=" << seed;
    std::vector<std::string> comments = {"config: " + resolved_text(base), meta.str()};
    return run_rows(comments, "", spec.parameter, std::move(tasks), outputs, method,
                    mc_trials, opts);
}

std::string run_figure_preset(const std::string& name, const ResolvedConfig& base,
                              secrecy::Method method, long long mc_trials,
                              std::uint64_t seed, const mc::SimOptions& opts) {
    FigurePreset p = figure_preset(name);
    auto outputs = normalize_outputs(p.outputs, mc_trials);

    std::vector<RowTask> tasks;
    std::size_t row = 0;
    for (const auto& curve : p.curves) {
        ResolvedConfig curve_cfg = base;
        for (const auto& pin : curve.pins) apply_value(curve_cfg, pin.first, pin.second);
        for (double v : p.values) {
            RowTask t;
            t.cfg = curve_cfg;
            apply_value(t.cfg, p.param, json(v));
            t.label = curve.label;
            t.x = v;
            t.x_linear = is_db_key(p.param) ? std::pow(10.0, v / 10.0) : v;
            t.seed = row_seed(seed, row++);
            tasks.push_back(std::move(t));
        }
    }

    std::ostringstream meta;
    meta << "figure: preset=" << name << " x=" << p.param << " method=" << method_name(method)
         << " trials=" << mc_trials << " seed=" << seed;
    std::vector<std::string> comments = {"config: " + resolved_text(base), meta.str()};
    return run_rows(comments, "curve", p.param, std::move(tasks), outputs, method,
                    mc_trials, opts);
}

std::string run_analyze(const ResolvedConfig& cfg, secrecy::Method method) {
    auto res = secrecy::secrecy_outage(cfg.system, cfg.numerics, method);
    double pt = secrecy::transmission_probability(cfg.system, cfg.numerics);
    double tau = cfg.system.R_s * pt;
    std::ostringstream os;
    os << "# config: " << resolved_text(cfg) << "\n";
    os << "p_out,p_eve,p_cov_l,p_t,throughput,method,quad_error,terms_t,terms_v\n";
    os << fmt9(res.p_out) << "," << fmt9(res.p_eve) << "," << fmt9(res.p_cov_l) << ","
       << fmt9(pt) << "," << fmt9(tau) << "," << method_name(res.method) << ","
       << fmt9(res.quad_error_estimate) << "," << res.terms_used_t << ","
       << res.terms_used_v << "\n";
    return os.str();
}

std::string run_mc(const ResolvedConfig& cfg, long long trials, std::uint64_t seed,
                   const mc::SimOptions& opts) {
    auto est = mc::simulate_secrecy_outage(cfg.system, trials, seed, opts);
    std::ostringstream os;
    os << "# config: " << resolved_text(cfg) << "\n";
    os << "# mc: trials=" << trials << " seed=" << seed << "\n";
    os << "p_hat,std_err,ci_low,ci_high,n_trials,successes\n";
    os << fmt9(est.p_hat) << "," << fmt9(est.std_err) << "," << fmt9(est.ci_low) << ","
       << fmt9(est.ci_high) << "," << est.n_trials << "," << est.successes << "\n";
    return os.str();
}

ValidationReport run_validate(const ResolvedConfig& cfg, long long mc_trials,
                              std::uint64_t seed, const mc::SimOptions& opts) {
    if (mc_trials < 10000)
        throw std::invalid_argument("validate: trials must be >= 10000");
    ValidationReport rep;
    std::ostringstream os;
    os << "# config: " << resolved_text(cfg) << "\n";

    auto quad = secrecy::secrecy_outage(cfg.system, cfg.numerics, secrecy::Method::quadrature);
    os << "quadrature   p_out = " << fmt9(quad.p_out) << "\n";

    const bool degenerate = cfg.system.rho == 0.0 || cfg.system.alpha == 1.0;
    const bool series_ok = cfg.system.main_branch.kappa > 0.0 && !degenerate;
    double series_delta_rel = 0.0;
    if (series_ok) {
        auto ser = secrecy::secrecy_outage(cfg.system, cfg.numerics, secrecy::Method::series);
        series_delta_rel =
            std::fabs(ser.p_out - quad.p_out) / std::max(std::fabs(quad.p_out), 1e-300);
        os << "series       p_out = " << fmt9(ser.p_out)
           << "  rel_delta = " << fmt9(series_delta_rel)
           << (series_delta_rel <= 1e-6 ? "  [ok]" : "  [wide: exceeds 1e-6]") << "\n";

        auto fixed_cfg = cfg.numerics;
        fixed_cfg.fixed_terms = 10;
        auto f10 = secrecy::secrecy_outage(cfg.system, fixed_cfg, secrecy::Method::series);
        os << "fixed10      p_out = " << fmt9(f10.p_out)
           << "  abs_delta_vs_adaptive = " << fmt9(std::fabs(f10.p_out - quad.p_out)) << "\n";
    } else {
        os << "series       skipped ("
           << (degenerate ? "degenerate rho/alpha case" : "kappa_s = 0") << ")\n";
    }

    auto est = mc::simulate_secrecy_outage(cfg.system, mc_trials, seed, opts);
    os << "mc           p_hat = " << fmt9(est.p_hat) << "  std_err = " << fmt9(est.std_err)
       << "  ci = [" << fmt9(est.ci_low) << ", " << fmt9(est.ci_high)
       << "]  trials = " << est.n_trials << "  seed = " << est.seed << "\n";

    double tol = std::max(0.01, 4.0 * est.std_err);
    double delta = std::fabs(quad.p_out - est.p_hat);
    bool mc_pass = delta <= tol;
    os << "analytic vs mc  |delta| = " << fmt9(delta) << "  tol = " << fmt9(tol) << "  -> "
       << (mc_pass ? "PASS" : "FAIL") << "\n";

    double pt = secrecy::transmission_probability(cfg.system, cfg.numerics);
    double pts = secrecy::transmission_probability_series(cfg.system, cfg.numerics);
    os << "p_t          cdf_route = " << fmt9(pt) << "  series_route = " << fmt9(pts)
       << "  abs_delta = " << fmt9(std::fabs(pt - pts)) << "\n";

    rep.pass = mc_pass;
    os << "RESULT: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    return rep;
}

} // namespace swiptsec::cli
