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

#include "swiptsec/secrecy.hpp"

#include <cstdint>
#include <utility>

namespace swiptsec::mc {

struct SimOptions {
    int workers = 0;             // 0 = hardware concurrency
    long long chunk_size = 16384;
    double z = 1.96;             // CI half-width multiplier

    void validate() const;
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    long long n_trials = 0;
    long long successes = 0;
    std::uint64_t seed = 0;
};

// Wilson score interval; exact endpoints 0 and 1 at 0/n and n/n.
std::pair<double, double> wilson_interval(long long successes, long long n, double z);

// Seeded simulation of the secrecy outage event: per trial, L main-link
// SNR draws and (when the eavesdroppers receive signal) L*N eavesdropper
// draws; outage when every antenna's secrecy capacity falls short of R_s.
// Trials are split into fixed-size chunks with independent substreams, so
// the estimate is identical for any worker count.
McEstimate simulate_secrecy_outage(const secrecy::SystemConfig& c, long long n_trials,
                                   std::uint64_t seed, const SimOptions& opts = {});

// Same machinery for the transmission event max_l log2(1 + SNR_l) > R_s.
McEstimate simulate_transmission_probability(const secrecy::SystemConfig& c,
                                             long long n_trials, std::uint64_t seed,
                                             const SimOptions& opts = {});

} // namespace swiptsec::mc
