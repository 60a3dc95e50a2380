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

#include "swiptsec/montecarlo.hpp"

#include "swiptsec/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace swiptsec::mc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Counts successes over [first, last) trials of `trial`, one substream per
// chunk so the result does not depend on how chunks are assigned to workers.
template <class Trial>
McEstimate run_chunked(long long n_trials, std::uint64_t seed, const SimOptions& opts,
                       const Trial& trial) {
    opts.validate();
    require(n_trials >= 1, "n_trials must be >= 1");
    const long long chunks = (n_trials + opts.chunk_size - 1) / opts.chunk_size;
    int workers = opts.workers > 0
                      ? opts.workers
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<long long>(workers, chunks));

    std::atomic<long long> next{0};
    std::atomic<long long> successes{0};
    auto work = [&] {
        for (;;) {
            long long c = next.fetch_add(1);
            if (c >= chunks) return;
            RandomStream rng = RandomStream::for_chunk(seed, static_cast<std::uint64_t>(c));
            long long first = c * opts.chunk_size;
            long long last = std::min(first + opts.chunk_size, n_trials);
            long long count = 0;
            for (long long i = first; i < last; ++i) count += trial(rng) ? 1 : 0;
            successes.fetch_add(count);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    McEstimate est;
    est.n_trials = n_trials;
    est.successes = successes.load();
    est.seed = seed;
    est.p_hat = static_cast<double>(est.successes) / static_cast<double>(n_trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_trials));
    auto ci = wilson_interval(est.successes, n_trials, opts.z);
    est.ci_low = ci.first;
    est.ci_high = ci.second;
    return est;
}

} // namespace

void SimOptions::validate() const {
    require(workers >= 0, "workers must be >= 0");
    require(chunk_size >= 1, "chunk_size must be >= 1");
    require(std::isfinite(z) && z > 0.0, "z must be > 0");
}

std::pair<double, double> wilson_interval(long long successes, long long n, double z) {
    require(n >= 1, "wilson_interval: n must be >= 1");
    require(successes >= 0 && successes <= n, "wilson_interval: successes out of range");
    require(std::isfinite(z) && z > 0.0, "wilson_interval: z must be > 0");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double den = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / den;
    const double hw = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / den;
    return {std::max(0.0, center - hw), std::min(1.0, center + hw)};
}

McEstimate simulate_secrecy_outage(const secrecy::SystemConfig& c, long long n_trials,
                                   std::uint64_t seed, const SimOptions& opts) {
    c.validate();
    const auto comp = secrecy::main_composite(c);
    const double omega = secrecy::eaves_power_ratio(c.rho, c.sigma2_over_N0, c.PL_e);
    const bool eaves_active = omega > 0.0;
    const fading::KappaMuParams eav =
        eaves_active ? secrecy::eaves_effective(c) : fading::KappaMuParams{};
    const double one_minus_alpha = 1.0 - c.alpha;
    const double log2e = 1.0 / std::log(2.0);

    auto trial = [&, comp, eav](RandomStream& rng) {
        double best = -1.0;
        for (int l = 0; l < c.L; ++l) {
            double gs = fading::sample(comp, rng);
            double cs = std::log1p(gs) * log2e;
            double ce = 0.0;
            if (eaves_active) {
                double ge = 0.0;
                for (int i = 0; i < c.N; ++i) ge = std::max(ge, fading::sample(eav, rng));
                ce = one_minus_alpha * std::log1p(ge) * log2e;
            }
            best = std::max(best, std::max(cs - ce, 0.0));
        }
        return best < c.R_s; // outage
    };
    return run_chunked(n_trials, seed, opts, trial);
}

McEstimate simulate_transmission_probability(const secrecy::SystemConfig& c,
                                             long long n_trials, std::uint64_t seed,
                                             const SimOptions& opts) {
    c.validate();
    const auto comp = secrecy::main_composite(c);
    const double th = std::exp2(c.R_s) - 1.0;
    auto trial = [&, comp](RandomStream& rng) {
        for (int l = 0; l < c.L; ++l)
            if (fading::sample(comp, rng) > th) return true;
        return false;
    };
    return run_chunked(n_trials, seed, opts, trial);
}

} // namespace swiptsec::mc
