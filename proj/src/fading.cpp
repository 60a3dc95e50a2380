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

#include "swiptsec/fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swiptsec::fading {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

} // namespace

void KappaMuParams::validate() const {
    require(std::isfinite(kappa) && kappa >= 0.0, "kappa must be finite and >= 0");
    require(std::isfinite(mu) && mu > 0.0, "mu must be finite and > 0");
    require(std::isfinite(mean_snr) && mean_snr > 0.0, "mean_snr must be finite and > 0");
}

double KappaMuParams::variance() const {
    // Var = mean^2 * (1 + 2 kappa) / (mu (1+kappa)^2), from the Poisson-Gamma
    // mixture moments.
    double c = 1.0 + kappa;
    return mean_snr * mean_snr * (1.0 + 2.0 * kappa) / (mu * c * c);
}

double pdf(const KappaMuParams& p, double gamma) {
    p.validate();
    require(!std::isnan(gamma) && gamma >= 0.0, "pdf: gamma must be >= 0");
    if (std::isinf(gamma)) return 0.0;
    const double h = p.rate();
    const double lam = p.mu * p.kappa;

    if (gamma == 0.0) {
        // Only the p = 0 Gamma(mu, h) component contributes; it is finite at
        // zero only for mu >= 1.
        if (p.mu > 1.0) return 0.0;
        if (p.mu == 1.0) return std::exp(-lam) * h;
        return std::numeric_limits<double>::infinity();
    }

    const double lh = std::log(h);
    const double lg = std::log(gamma);
    // ln of term p = 0, then the ratio lam * h * gamma / ((p+1)(mu+p)).
    double lt = -lam + p.mu * lh + (p.mu - 1.0) * lg - h * gamma - specfun::log_gamma(p.mu);
    if (lam == 0.0) return std::exp(lt);

    const double lstep = std::log(lam) + lh + lg;
    double m = lt;
    double s = 1.0;
    const double peak = std::sqrt(lam * h * gamma);
    const int cap = 100000;
    for (int k = 1; k <= cap; ++k) {
        lt += lstep - std::log(static_cast<double>(k)) - std::log(p.mu + k - 1.0);
        if (lt > m) {
            s = s * std::exp(m - lt) + 1.0;
            m = lt;
        } else {
            double e = std::exp(lt - m);
            s += e;
            if (k > peak && e < kEps * s) break;
        }
        if (k == cap)
            throw specfun::ConvergenceError("pdf: mixture did not converge",
                                            std::exp(m + std::log(s)), 0.0);
    }
    return std::exp(m + std::log(s));
}

double survival(const KappaMuParams& p, double gamma, const specfun::AccuracyBudget& budget) {
    p.validate();
    require(!std::isnan(gamma) && gamma >= 0.0, "survival: gamma must be >= 0");
    if (gamma == 0.0) return 1.0;
    if (std::isinf(gamma)) return 0.0;
    double a = std::sqrt(2.0 * p.kappa * p.mu);
    double b = std::sqrt(2.0 * (1.0 + p.kappa) * p.mu * gamma / p.mean_snr);
    return specfun::marcum_q(p.mu, a, b, budget);
}

double cdf(const KappaMuParams& p, double gamma, const specfun::AccuracyBudget& budget) {
    return std::clamp(1.0 - survival(p, gamma, budget), 0.0, 1.0);
}

KappaMuParams mrc_composite(const KappaMuParams& p, int m_branches) {
    p.validate();
    require(m_branches >= 1, "mrc_composite: branch count must be >= 1");
    return {p.kappa, p.mu * m_branches, p.mean_snr * m_branches};
}

double sample(const KappaMuParams& p, RandomStream& rng) {
    p.validate();
    long long comp = rng.poisson(p.mu * p.kappa);
    double g = rng.gamma(p.mu + static_cast<double>(comp));
    return g / p.rate();
}

} // namespace swiptsec::fading
