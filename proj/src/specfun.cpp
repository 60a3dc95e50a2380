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

#include "swiptsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swiptsec::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();
constexpr int kGammaItmax = 50000;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

// P(a,x) by the lower series, valid (and fast) for x < a + 1.
double lower_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < kGammaItmax; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum * std::exp(a * std::log(x) - x - log_gamma(a));
    }
    throw ConvergenceError("reg_lower_gamma: series did not converge", sum, std::fabs(del));
}

// Q(a,x) by the Lentz continued fraction, valid for x >= a + 1.
double upper_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaItmax; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            return h * std::exp(a * std::log(x) - x - log_gamma(a));
    }
    throw ConvergenceError("reg_upper_gamma: continued fraction did not converge", h, 0.0);
}

} // namespace

void AccuracyBudget::validate() const {
    require(std::isfinite(rel_tol) && rel_tol > 0.0 && rel_tol <= 1e-3,
            "AccuracyBudget: rel_tol must be in (0, 1e-3]");
    require(max_terms >= 16, "AccuracyBudget: max_terms must be >= 16");
}

double log_gamma(double a) {
    require(std::isfinite(a) && a > 0.0, "log_gamma: argument must be positive");
    // Lanczos, g = 7, 9 coefficients.
    static const double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    if (a < 0.5) {
        // Reflection keeps the approximation in its accurate range.
        return std::log(M_PI / std::sin(M_PI * a)) - log_gamma(1.0 - a);
    }
    double z = a - 1.0;
    double x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + i);
    double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double reg_lower_gamma(double a, double x) {
    require(std::isfinite(a) && a > 0.0, "reg_lower_gamma: a must be positive");
    require(!std::isnan(x) && x >= 0.0, "reg_lower_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return std::clamp(lower_series(a, x), 0.0, 1.0);
    return std::clamp(1.0 - upper_cf(a, x), 0.0, 1.0);
}

double reg_upper_gamma(double a, double x) {
    require(std::isfinite(a) && a > 0.0, "reg_upper_gamma: a must be positive");
    require(!std::isnan(x) && x >= 0.0, "reg_upper_gamma: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return std::clamp(1.0 - lower_series(a, x), 0.0, 1.0);
    return std::clamp(upper_cf(a, x), 0.0, 1.0);
}

double log_bessel_i(double nu, double x) {
    require(std::isfinite(nu) && nu >= 0.0, "log_bessel_i: order must be >= 0");
    require(std::isfinite(x) && x >= 0.0, "log_bessel_i: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();

    // Power series in the log domain with a running log-sum-exp, so terms can
    // individually overflow/underflow without disturbing the sum. Terms grow
    // until k ~ x/2 and decay factorially after.
    const double lh = std::log(0.5 * x);
    double lt = nu * lh - log_gamma(nu + 1.0);
    double m = lt;
    double s = 1.0;
    const int cap = 1000 + static_cast<int>(4.0 * x);
    for (int k = 1; k <= cap; ++k) {
        lt += 2.0 * lh - std::log(static_cast<double>(k)) - std::log(nu + k);
        if (lt > m) {
            s = s * std::exp(m - lt) + 1.0;
            m = lt;
        } else {
            double e = std::exp(lt - m);
            s += e;
            if (k > 0.5 * x && e < kEps * s) return m + std::log(s);
        }
    }
    throw ConvergenceError("log_bessel_i: series did not converge", m + std::log(s), 0.0);
}

double bessel_i(double nu, double x) {
    return std::exp(log_bessel_i(nu, x));
}

double marcum_q(double order, double a, double b, const AccuracyBudget& budget) {
    budget.validate();
    require(std::isfinite(order) && order > 0.0, "marcum_q: order must be positive");
    require(std::isfinite(a) && a >= 0.0, "marcum_q: a must be >= 0");
    require(!std::isnan(b) && b >= 0.0, "marcum_q: b must be >= 0");
    if (b == 0.0) return 1.0;

    const double y = 0.5 * b * b;
    const double lam = 0.5 * a * a;
    if (lam == 0.0) return reg_upper_gamma(order, y);
    if (std::isinf(y)) return 0.0;

    const double llam = std::log(lam);
    double sum = 0.0;
    double cum = 0.0;
    double lw = -lam; // ln of the k-th Poisson(lam) weight
    for (int k = 0; k < budget.max_terms; ++k) {
        if (k > 0) lw += llam - std::log(static_cast<double>(k));
        double w = std::exp(lw);
        cum += w;
        sum += w * reg_upper_gamma(order + k, y);
        // Remaining contribution is at most the remaining Poisson mass (the
        // gamma factors are < 1). 1 - cum quantizes at one ulp, which a deep
        // tail sum can sit far below, so once the weights decay a geometric
        // majorant of the true mass takes over.
        double tail = 1.0 - cum;
        double ratio = lam / (k + 2.0);
        if (ratio < 1.0) {
            double w_next = std::exp(lw + llam - std::log(k + 1.0));
            tail = std::min(tail, w_next / (1.0 - ratio));
        }
        if (tail <= std::max(budget.rel_tol * sum, 1e-300))
            return std::clamp(sum, 0.0, 1.0);
    }
    throw ConvergenceError("marcum_q: Poisson mixture exhausted max_terms", sum,
                           std::max(1.0 - cum, 0.0));
}

} // namespace swiptsec::specfun
