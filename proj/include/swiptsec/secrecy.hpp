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

#include "swiptsec/fading.hpp"
#include "swiptsec/specfun.hpp"

namespace swiptsec::secrecy {

// How main_branch.mean_snr relates to the M-branch combiner output: either
// it is the per-branch mean (combiner mean = M * mean_snr, the default) or
// it already describes the combiner output.
enum class MeanInterpretation { per_branch_times_M, combiner_output };

enum class Method { quadrature, series };

// Downlink with L transmit antennas (selection), an M-branch MRC legitimate
// receiver, and N cooperating eavesdroppers that power-split a fraction rho
// of their received signal for information decoding and eavesdrop during the
// (1 - alpha) information phase of each block.
struct SystemConfig {
    int L = 1;
    int M = 1;
    int N = 1;
    double rho = 0.8;             // power-splitting ratio, [0,1]
    double alpha = 0.1;           // time-switching fraction, [0,1]
    double R_s = 1.0;             // secrecy rate target, bits/s/Hz
    double sigma2_over_N0 = 1.0;  // conversion-to-processing noise ratio
    double PL_s = 1.0;            // main-link path loss, linear, >= 1
    double PL_e = 1.0;            // eavesdropper path loss, linear, >= 1
    fading::KappaMuParams main_branch{1.0, 1.0, 10.0};
    fading::KappaMuParams eaves{1.0, 1.0, 1.0};
    MeanInterpretation mean_interpretation = MeanInterpretation::per_branch_times_M;

    void validate() const;
};

struct NumericsConfig {
    specfun::AccuracyBudget series_budget{};
    double quad_rel_tol = 1e-10;
    double quad_abs_tol = 1e-13;
    double tail_cutoff_sigma = 40.0;
    int fixed_terms = 0; // 0 = adaptive truncation; > 0 pins every series

    void validate() const;
};

struct OutageResult {
    double p_out = 0.0;      // secrecy outage probability
    double p_eve = 0.0;      // per-eavesdropper coverage factor, p_cov_l^(1/N)
    double p_cov_l = 0.0;    // P[one antenna sustains R_s against all N eavesdroppers]
    int terms_used_t = 0;    // eavesdropper-series terms (series method)
    int terms_used_v = 0;    // main-link-series terms (series method)
    double quad_error_estimate = 0.0;
    Method method = Method::quadrature;
};

// Free-space style path loss (4 pi / (Gt Gr lambda))^2 * d^beta; all
// arguments positive, result >= 0 dB is the caller's concern.
double pathloss(double distance, double exponent, double gain_tx, double gain_rx,
                double wavelength);

// Fraction of the transmit-side mean SNR that survives power splitting and
// conversion noise at an eavesdropper: rho / (PL_e (rho + sigma2_over_N0)).
// Exactly 0 at rho = 0.
double eaves_power_ratio(double rho, double sigma2_over_N0, double pl_e);

// Eavesdropper SNR below which a main-link SNR of gamma_s still yields
// secrecy capacity >= R_s: ((1+gamma_s)/2^R_s)^(1/(1-alpha)) - 1.
// Requires alpha < 1 and gamma_s >= 2^R_s - 1.
double gamma_threshold(double gamma_s, double R_s, double alpha);

// Effective distributions after combining, path loss, and power splitting.
fading::KappaMuParams main_composite(const SystemConfig& c);
fading::KappaMuParams eaves_effective(const SystemConfig& c);

// Probability that one antenna's transmission stays secret from a single
// eavesdropper, integral form: integral over gamma_s of
// F_e(gamma_threshold(gamma_s)) f_s(gamma_s) above the transmission
// threshold. Requires alpha < 1 (callers shortcut alpha = 1).
double p_eve_quadrature(const SystemConfig& c, const NumericsConfig& n);

// Same quantity by the truncated double power series. Requires kappa_s > 0;
// kappa_s = 0 callers are routed to quadrature.
double p_eve_series(const SystemConfig& c, const NumericsConfig& n);

// Full secrecy outage probability with L-antenna selection and N
// eavesdroppers. Degenerate cases rho = 0 and alpha = 1 reduce exactly to
// 1 - transmission_probability without touching gamma_threshold.
OutageResult secrecy_outage(const SystemConfig& c, const NumericsConfig& n,
                            Method method = Method::quadrature);

// P[best of L antennas has log2(1 + SNR) > R_s] = 1 - F_s(2^R_s - 1)^L.
double transmission_probability(const SystemConfig& c, const NumericsConfig& n);
// Same through the truncated mixture series for F_s; cross-check route.
double transmission_probability_series(const SystemConfig& c, const NumericsConfig& n);

// tau = R_s * transmission_probability.
double secrecy_throughput(const SystemConfig& c, const NumericsConfig& n);

} // namespace swiptsec::secrecy
