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

#pragma once

#include "swiptsec/config_io.hpp"
#include "swiptsec/montecarlo.hpp"
#include "swiptsec/secrecy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace swiptsec::cli {

// Analytic outputs a sweep row may request. p_out_mc (with its stderr) is
// added when mc_trials > 0.
const std::vector<std::string>& allowed_outputs();

struct SweepSpec {
    std::string parameter;        // dotted config path, numeric scalar
    std::vector<double> values;   // in sweep order, written as given
    std::vector<std::string> outputs; // empty = p_out_analytic, p_t, throughput
};

// CSV with '#' comment lines echoing the resolved base config and the sweep
// request; one row per value, evaluator errors recorded as "error" cells
// rather than aborting. Rows are evaluated concurrently and written in order.
std::string run_sweep(const ResolvedConfig& base, const SweepSpec& spec,
                      secrecy::Method method, long long mc_trials, std::uint64_t seed,
                      const mc::SimOptions& opts = {});

// Named figure presets (fig2, fig3a, fig3b, fig4, fig5): families of sweeps
// with a leading `curve` label column. User config/--set overrides are the
// base; each curve then pins its own fields.
std::string run_figure_preset(const std::string& name, const ResolvedConfig& base,
                              secrecy::Method method, long long mc_trials,
                              std::uint64_t seed, const mc::SimOptions& opts = {});
std::vector<std::string> figure_preset_names();

// One-row CSV for a single configuration.
std::string run_analyze(const ResolvedConfig& cfg, secrecy::Method method);
std::string run_mc(const ResolvedConfig& cfg, long long trials, std::uint64_t seed,
                   const mc::SimOptions& opts = {});

struct ValidationReport {
    std::string text;
    bool pass = false;
};

// Analytic-vs-MC cross-check at one configuration: both evaluators, the
// fixed 10-term truncation, an MC run with Wilson CI, and the transmission
// probability by both routes. `pass` reflects the MC agreement tolerance
// max(0.01, 4 * stderr).
ValidationReport run_validate(const ResolvedConfig& cfg, long long mc_trials,
                              std::uint64_t seed, const mc::SimOptions& opts = {});

} // namespace swiptsec::cli
