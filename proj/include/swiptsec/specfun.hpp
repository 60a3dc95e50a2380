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

#include <stdexcept>
#include <string>

namespace swiptsec::specfun {

// Accuracy contract for the truncated series evaluators. rel_tol bounds the
// neglected tail relative to the accumulated sum; max_terms caps the work.
struct AccuracyBudget {
    double rel_tol = 1e-10;
    int max_terms = 10000;

    void validate() const;
};

// Thrown when a series or quadrature fails to meet its budget. Carries the
// partial result and a bound on the neglected remainder so callers can decide
// whether the partial answer is still usable.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double partial, double bound)
        : std::runtime_error(what), partial_(partial), bound_(bound) {}

    double partial_value() const { return partial_; }
    double error_bound() const { return bound_; }

  private:
    double partial_;
    double bound_;
};

// ln Gamma(a), a > 0. Lanczos approximation, ~1e-14 relative.
double log_gamma(double a);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x),
// a > 0, x >= 0. Lower series for x < a+1, continued fraction otherwise,
// so the smaller of the pair is always the one computed directly.
double reg_lower_gamma(double a, double x);
double reg_upper_gamma(double a, double x);

// Modified Bessel function of the first kind, order nu >= 0, x >= 0.
// log_bessel_i stays in the log domain and is safe for large x where
// I_nu(x) ~ e^x overflows.
double bessel_i(double nu, double x);
double log_bessel_i(double nu, double x);

// Generalized Marcum Q-function Q_order(a, b), order > 0, a,b >= 0, as the
// Poisson(a^2/2) mixture of upper incomplete gammas. Stops once the
// remaining Poisson mass is below budget.rel_tol of the accumulated sum;
// throws ConvergenceError if max_terms is exhausted first.
double marcum_q(double order, double a, double b, const AccuracyBudget& budget = {});

} // namespace swiptsec::specfun
