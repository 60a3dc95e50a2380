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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swiptsec/specfun.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace swiptsec::specfun;

namespace {

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

} // namespace

TEST_CASE("log_gamma matches the standard library") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    for (double a : {0.1, 0.37, 0.9, 1.5, 3.25, 10.3, 41.0, 170.5, 1234.5}) {
        CAPTURE(a);
        CHECK(close_rel(log_gamma(a), std::lgamma(a), 1e-12));
    }
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("incomplete gamma halves are complementary and hit closed forms") {
    const std::vector<double> as = {0.3, 0.5, 1.0, 2.5, 7.0, 25.0, 120.0};
    const std::vector<double> xs = {0.0, 0.05, 0.4, 1.0, 3.0, 9.0, 40.0, 200.0};
    for (double a : as)
        for (double x : xs) {
            CAPTURE(a);
            CAPTURE(x);
            double p = reg_lower_gamma(a, x);
            double q = reg_upper_gamma(a, x);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(std::fabs(p + q - 1.0) <= 1e-12);
        }
    // a = 1 integrates to 1 - e^-x; a = 0.5 is erf(sqrt(x)).
    for (double x : {0.01, 0.3, 1.0, 2.7, 8.0}) {
        CHECK(close_rel(reg_lower_gamma(1.0, x), -std::expm1(-x), 1e-13));
        CHECK(close_rel(reg_lower_gamma(0.5, x), std::erf(std::sqrt(x)), 1e-12));
    }
    CHECK(reg_lower_gamma(3.0, 0.0) == 0.0);
    CHECK(reg_upper_gamma(3.0, 0.0) == 1.0);
    CHECK(close_rel(reg_lower_gamma(1.0, M_LN2), 0.5, 1e-13));
    CHECK(close_rel(reg_lower_gamma(2.0, 1.0), 1.0 - 2.0 * std::exp(-1.0), 1e-13));
    // Monotone in x.
    double prev = -1.0;
    for (double x = 0.0; x <= 12.0; x += 0.25) {
        double p = reg_lower_gamma(4.0, x);
        CHECK(p >= prev);
        prev = p;
    }
    CHECK_THROWS_AS(reg_lower_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_lower_gamma(2.0, -1.0), std::domain_error);
}

TEST_CASE("bessel_i reference values and recurrence") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(2.0, 0.0) == 0.0);
    CHECK(close_rel(bessel_i(2.0, 3.0), 2.2452124409299511546, 1e-13));
    // Half-integer order has the elementary form sqrt(2/(pi x)) sinh x.
    double ref = std::sqrt(2.0 / (M_PI * 1.0)) * std::sinh(1.0);
    CHECK(close_rel(bessel_i(0.5, 1.0), ref, 1e-13));
    CHECK(close_rel(bessel_i(0.5, 1.0), 0.93767488824548764672, 1e-13));

    // I_{nu-1}(x) - I_{nu+1}(x) = (2 nu / x) I_nu(x)
    for (double nu : {1.0, 2.0, 5.0, 11.0, 20.0})
        for (double x : {0.1, 0.7, 2.0, 10.0, 45.0, 100.0}) {
            CAPTURE(nu);
            CAPTURE(x);
            double lhs = bessel_i(nu - 1.0, x) - bessel_i(nu + 1.0, x);
            double rhs = 2.0 * nu / x * bessel_i(nu, x);
            CHECK(close_rel(lhs, rhs, 1e-8));
        }
}

TEST_CASE("log_bessel_i stays finite where bessel_i overflows") {
    double lv = log_bessel_i(1.0, 800.0);
    CHECK(std::isfinite(lv));
    CHECK(std::isinf(bessel_i(1.0, 800.0))); // exp overflow is expected here
    // Leading asymptotic term e^x / sqrt(2 pi x).
    double asym = 800.0 - 0.5 * std::log(2.0 * M_PI * 800.0);
    CHECK(std::fabs(lv - asym) < 1e-2);
    CHECK(log_bessel_i(3.0, 0.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("marcum_q reference values and identities") {
    CHECK(close_rel(marcum_q(2.0, 1.0, 2.0), 0.53014690808396572479, 1e-10));
    // b = 0 gives 1 for any order and offset.
    for (double mu : {0.5, 1.0, 3.5, 10.0})
        for (double a : {0.0, 0.3, 2.0, 9.0}) CHECK(marcum_q(mu, a, 0.0) == 1.0);
    // Order 1, a = 0 collapses to exp(-b^2/2).
    for (double b : {0.1, 0.5, 1.0, 2.0, 4.0, 6.0}) {
        CAPTURE(b);
        CHECK(close_rel(marcum_q(1.0, 0.0, b), std::exp(-0.5 * b * b), 1e-10));
    }
    // Monotone decreasing in b.
    double prev = 1.0;
    for (double b = 0.0; b <= 8.0; b += 0.2) {
        double q = marcum_q(1.5, 1.0, b);
        CHECK(q <= prev + 1e-14);
        prev = q;
    }
    // Tightening the budget does not change the answer materially.
    AccuracyBudget loose{1e-6, 10000};
    AccuracyBudget tight{1e-12, 10000};
    CHECK(close_rel(marcum_q(2.5, 1.7, 2.2, loose), marcum_q(2.5, 1.7, 2.2, tight), 1e-5));
}

TEST_CASE("marcum_q reports budget exhaustion with a usable partial value") {
    AccuracyBudget small{1e-10, 16};
    try {
        marcum_q(1.0, 40.0, 1.0, small); // Poisson mass centred at 800, 16 terms
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.partial_value() >= 0.0);
        CHECK(e.partial_value() <= 1.0);
        CHECK(e.error_bound() > 0.0);
        CHECK(e.error_bound() <= 1.0);
    }
}

TEST_CASE("domain and budget validation") {
    CHECK_THROWS_AS(marcum_q(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(marcum_q(1.0, -0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(marcum_q(1.0, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(bessel_i(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(1.0, -1.0), std::domain_error);
    AccuracyBudget bad_tol{0.0, 100};
    CHECK_THROWS_AS(bad_tol.validate(), std::domain_error);
    AccuracyBudget bad_terms{1e-10, 8};
    CHECK_THROWS_AS(bad_terms.validate(), std::domain_error);
    AccuracyBudget coarse{1e-2, 100};
    CHECK_THROWS_AS(coarse.validate(), std::domain_error);
}
