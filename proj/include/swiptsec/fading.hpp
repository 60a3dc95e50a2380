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

#include "swiptsec/rng.hpp"
#include "swiptsec/specfun.hpp"

namespace swiptsec::fading {

// Instantaneous-SNR distribution of a kappa-mu faded link. kappa is the
// ratio of dominant to scattered power (kappa -> 0 recovers Nakagami-m with
// m = mu; kappa = K, mu = 1 recovers Rician-K; kappa -> 0, mu = 1 Rayleigh),
// mu the number of multipath clusters, mean_snr the average SNR (linear).
struct KappaMuParams {
    double kappa = 1.0;
    double mu = 1.0;
    double mean_snr = 1.0;

    void validate() const;

    // Rate of the conditional Gamma mixture components: mu*(1+kappa)/mean.
    double rate() const { return mu * (1.0 + kappa) / mean_snr; }
    // Variance of the SNR.
    double variance() const;
};

// SNR density at gamma >= 0. Evaluated as the Poisson(mu*kappa) mixture of
// Gamma(mu+p, rate) densities in the log domain; exact at kappa = 0 where it
// collapses to the single Gamma term.
double pdf(const KappaMuParams& p, double gamma);

// P[SNR <= gamma] = 1 - Q_mu(sqrt(2 kappa mu), sqrt(2 (1+kappa) mu gamma / mean)).
double cdf(const KappaMuParams& p, double gamma,
           const specfun::AccuracyBudget& budget = {});

// P[SNR > gamma], computed directly from the Marcum Q so deep-tail values
// keep full relative accuracy.
double survival(const KappaMuParams& p, double gamma,
                const specfun::AccuracyBudget& budget = {});

// Distribution of an M-branch maximal-ratio combiner output when every
// branch fades i.i.d. with parameters p: kappa unchanged, mu and mean scaled
// by M.
KappaMuParams mrc_composite(const KappaMuParams& p, int m_branches);

// One draw: P ~ Poisson(mu*kappa), G ~ Gamma(mu+P, 1), SNR = G / rate.
double sample(const KappaMuParams& p, RandomStream& rng);

} // namespace swiptsec::fading
