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
#include "swiptsec/sweep.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using swiptsec::cli::ConfigError;

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out;
    std::string method = "quadrature";
    std::uint64_t seed = 42;
    long long trials = 0;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_method = true) {
    cmd->add_option("--config", a.config_path, "JSON config file");
    cmd->add_option("--set", a.sets, "override a config key, key=value (repeatable)");
    cmd->add_option("--out", a.out, "write output to a file instead of stdout");
    if (with_method)
        cmd->add_option("--method", a.method, "analytic evaluator")
            ->check(CLI::IsMember({"quadrature", "series"}));
    cmd->add_option("--seed", a.seed, "RNG seed for Monte Carlo draws");
    cmd->add_option("--workers", a.workers, "worker threads (0 = auto)");
}

swiptsec::cli::ResolvedConfig load_config(const CommonArgs& a) {
    std::string text = "{}";
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path);
        if (!in) throw ConfigError("", "cannot open config file: " + a.config_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto cfg = swiptsec::cli::parse_config_text(text);
    for (const auto& s : a.sets) swiptsec::cli::apply_set(cfg, s);
    return cfg;
}

swiptsec::secrecy::Method method_of(const CommonArgs& a) {
    return a.method == "series" ? swiptsec::secrecy::Method::series
                                : swiptsec::secrecy::Method::quadrature;
}

void emit(const CommonArgs& a, const std::string& text) {
    if (a.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + a.out);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"secrecy outage and throughput of a SWIPT downlink with antenna "
                 "selection over kappa-mu fading"};
    app.require_subcommand(1);

    CommonArgs a;

    auto* analyze = app.add_subcommand("analyze", "evaluate one configuration");
    add_common(analyze, a);

    auto* sweep = app.add_subcommand("sweep", "sweep one parameter, emit CSV");
    add_common(sweep, a);
    std::string param;
    std::vector<double> values;
    std::vector<std::string> outputs;
    sweep->add_option("--param", param, "config key to sweep")->required();
    sweep->add_option("--values", values, "values in sweep order")
        ->required()
        ->delimiter(',');
    sweep->add_option("--outputs", outputs, "columns to emit")->delimiter(',');
    sweep->add_option("--trials", a.trials, "Monte Carlo trials per row (0 = analytic only)");

    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of the outage probability");
    add_common(mc_cmd, a, false);
    mc_cmd->add_option("--trials", a.trials, "number of trials")->required();

    auto* validate = app.add_subcommand("validate", "cross-check analytic vs Monte Carlo");
    add_common(validate, a);
    a.trials = 0;
    long long validate_trials = 100000;
    validate->add_option("--trials", validate_trials, "Monte Carlo trials (>= 10000)");

    auto* figure = app.add_subcommand("figure", "emit the CSV behind a named figure preset");
    add_common(figure, a);
    std::string preset;
    figure->add_option("--preset", preset, "fig2, fig3a, fig3b, fig4, or fig5")->required();
    figure->add_option("--trials", a.trials, "Monte Carlo trials per row (0 = analytic only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    swiptsec::mc::SimOptions opts;
    opts.workers = a.workers;

    try {
        auto cfg = load_config(a);
        if (app.got_subcommand(analyze)) {
            emit(a, swiptsec::cli::run_analyze(cfg, method_of(a)));
        } else if (app.got_subcommand(sweep)) {
            swiptsec::cli::SweepSpec spec{param, values, outputs};
            emit(a, swiptsec::cli::run_sweep(cfg, spec, method_of(a), a.trials, a.seed, opts));
        } else if (app.got_subcommand(mc_cmd)) {
            if (a.trials < 1) throw std::invalid_argument("mc: trials must be >= 1");
            emit(a, swiptsec::cli::run_mc(cfg, a.trials, a.seed, opts));
        } else if (app.got_subcommand(validate)) {
            auto rep = swiptsec::cli::run_validate(cfg, validate_trials, a.seed, opts);
            emit(a, rep.text);
            return rep.pass ? 0 : 1;
        } else if (app.got_subcommand(figure)) {
            emit(a, swiptsec::cli::run_figure_preset(preset, cfg, method_of(a), a.trials,
                                                     a.seed, opts));
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
