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

#include "swiptsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace swiptsec::secrecy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

double threshold_snr(double R_s) { return std::exp2(R_s) - 1.0; }

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7-15 adaptive quadrature. Nodes and weights are the standard
// QUADPACK dqk15 constants.

const double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
const double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
const double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct QuadAccum {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;
};

void gk15(const std::function<double(double)>& f, double a, double b, double& ik,
          double& ig) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 3; ++j) {
        double x = hl * kXgk[2 * j + 1];
        double f1 = f(c - x);
        double f2 = f(c + x);
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[2 * j + 1] * (f1 + f2);
    }
    for (int j = 0; j < 4; ++j) {
        double x = hl * kXgk[2 * j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        resk += kWgk[2 * j] * (f1 + f2);
    }
    ik = resk * hl;
    ig = resg * hl;
}

void adapt(const std::function<double(double)>& f, double a, double b, double abs_tol,
           double rel_tol, int depth, QuadAccum& out) {
    double ik, ig;
    gk15(f, a, b, ik, ig);
    out.evals += 15;
    double err = std::fabs(ik - ig);
    if (depth <= 0 || err <= std::max(abs_tol, rel_tol * std::fabs(ik))) {
        out.value += ik;
        out.error += err;
        return;
    }
    double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1, out);
    adapt(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1, out);
}

QuadAccum integrate(const std::function<double(double)>& f, double a, double b,
                    double abs_tol, double rel_tol) {
    QuadAccum out;
    if (b <= a) return out;
    adapt(f, a, b, abs_tol, rel_tol, 30, out);
    double target = 100.0 * (abs_tol + rel_tol * std::max(std::fabs(out.value), 1e-12));
    if (out.error > target)
        throw specfun::ConvergenceError("quadrature did not reach the requested tolerance",
                                        out.value, out.error);
    return out;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre panel rule used by the series evaluator (fixed smooth
// integrands, no adaptivity needed). Nodes by Newton iteration, cached.

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

const int kPanelDegree = 24;

const std::vector<double>& gl_nodes() {
    static std::vector<double> x, w;
    if (x.empty()) gauss_legendre(kPanelDegree, x, w);
    return x;
}

const std::vector<double>& gl_weights() {
    static std::vector<double> x, w;
    if (w.empty()) gauss_legendre(kPanelDegree, x, w);
    return w;
}

// ---------------------------------------------------------------------------

// Upper integration limit: start tail_cutoff_sigma standard deviations past
// the mean and grow geometrically until the neglected survival mass is below
// quad_abs_tol (or cannot be resolved further).
double upper_limit(const fading::KappaMuParams& comp, double th, const NumericsConfig& n,
                   double& tail_bound) {
    double sd = std::sqrt(comp.variance());
    double u = th + comp.mean_snr + n.tail_cutoff_sigma * sd;
    double surv = fading::survival(comp, u, n.series_budget);
    for (int i = 0; i < 200 && surv > n.quad_abs_tol; ++i) {
        u = th + (u - th) * 1.6;
        surv = fading::survival(comp, u, n.series_budget);
    }
    tail_bound = surv;
    return u;
}

// Unnormalized Poisson(lam) weights w_0..w_{T-1} plus the neglected mass.
// T is `fixed` when pinned, otherwise grown until the tail drops below tol.
std::vector<double> poisson_weights(double lam, double tol, int max_terms, int fixed,
                                    double& tail) {
    std::vector<double> w;
    if (lam == 0.0) {
        w.assign(fixed > 0 ? fixed : 1, 0.0);
        w[0] = 1.0;
        tail = 0.0;
        return w;
    }
    const double llam = std::log(lam);
    double cum = 0.0;
    int limit = fixed > 0 ? fixed : max_terms;
    for (int k = 0; k < limit; ++k) {
        double lw = -lam + k * llam - specfun::log_gamma(k + 1.0);
        w.push_back(std::exp(lw));
        cum += w.back();
        if (fixed == 0 && 1.0 - cum < tol) {
            tail = std::max(1.0 - cum, 0.0);
            return w;
        }
    }
    tail = std::max(1.0 - cum, 0.0);
    if (fixed == 0)
        throw specfun::ConvergenceError("series truncation exhausted max_terms", cum, tail);
    return w;
}

struct CovResult {
    double value = 0.0;
    double error = 0.0;
    int terms_t = 0;
    int terms_v = 0;
};

// P[C_sec of one antenna >= R_s against all N eavesdroppers], integral form.
CovResult quad_p_cov(const SystemConfig& c, const NumericsConfig& n, int N) {
    const auto comp = main_composite(c);
    const double th = threshold_snr(c.R_s);
    const double omega = eaves_power_ratio(c.rho, c.sigma2_over_N0, c.PL_e);

    CovResult r;
    if (omega == 0.0) {
        // The eavesdroppers harvest everything; coverage is plain
        // transmission above threshold.
        r.value = fading::survival(comp, th, n.series_budget);
        return r;
    }

    double surv_th = fading::survival(comp, th, n.series_budget);
    if (surv_th <= n.quad_abs_tol) {
        // The whole integrand mass is below the absolute tolerance.
        r.error = surv_th;
        return r;
    }

    const auto eav = eaves_effective(c);
    double tail_bound = 0.0;
    const double u = upper_limit(comp, th, n, tail_bound);
    const double pw = 1.0 / (1.0 - c.alpha);
    const double s = std::exp2(c.R_s);
    const auto& budget = n.series_budget;

    auto f = [&](double g) {
        double gth = std::pow((1.0 + g) / s, pw) - 1.0;
        double fe = fading::cdf(eav, std::max(gth, 0.0), budget);
        double fn = N == 1 ? fe : std::pow(fe, N);
        return fn * fading::pdf(comp, g);
    };
    QuadAccum q = integrate(f, th, u, n.quad_abs_tol, n.quad_rel_tol);
    r.value = clamp01(q.value);
    r.error = q.error + tail_bound;
    return r;
}

// Same probability via the truncated double series: the eavesdropper CDF is
// expanded as a Poisson(mu_e kappa_e) mixture of lower incomplete gammas and
// the composite main density as a Poisson(mu~ kappa_s) mixture of Gamma
// densities; the remaining one-dimensional integrals are done on fixed
// Gauss-Legendre panels.
CovResult series_p_cov(const SystemConfig& c, const NumericsConfig& n, int N) {
    require(c.main_branch.kappa > 0.0, "series evaluator requires kappa_s > 0");
    const auto comp = main_composite(c);
    const double th = threshold_snr(c.R_s);
    const double h = comp.rate();
    const double lam_s = comp.mu * comp.kappa;
    const double omega = eaves_power_ratio(c.rho, c.sigma2_over_N0, c.PL_e);
    const double term_tol = 0.25 * n.series_budget.rel_tol;

    CovResult r;
    double tail_s = 0.0;
    auto ws = poisson_weights(lam_s, term_tol, n.series_budget.max_terms, n.fixed_terms,
                              tail_s);
    r.terms_v = static_cast<int>(ws.size());

    std::vector<double> lgs(ws.size());
    for (size_t v = 0; v < ws.size(); ++v) lgs[v] = specfun::log_gamma(comp.mu + v);
    const double lh = std::log(h);

    auto fs_trunc = [&](double g) {
        double lg = std::log(g);
        double acc = 0.0;
        for (size_t v = 0; v < ws.size(); ++v) {
            double a = comp.mu + static_cast<double>(v);
            acc += ws[v] * std::exp(a * lh + (a - 1.0) * lg - h * g - lgs[v]);
        }
        return acc;
    };

    if (omega == 0.0) {
        double acc = 0.0;
        for (size_t v = 0; v < ws.size(); ++v)
            acc += ws[v] * specfun::reg_upper_gamma(comp.mu + v, h * th);
        r.value = clamp01(acc);
        r.error = tail_s;
        return r;
    }

    const auto eav = eaves_effective(c);
    const double he = eav.rate();
    const double lam_e = eav.mu * eav.kappa;
    double tail_e = 0.0;
    auto we = poisson_weights(lam_e, term_tol, n.series_budget.max_terms, n.fixed_terms,
                              tail_e);
    r.terms_t = static_cast<int>(we.size());

    double tail_u = 0.0;
    const double u = upper_limit(comp, th, n, tail_u);
    const double pw = 1.0 / (1.0 - c.alpha);
    const double s = std::exp2(c.R_s);

    auto fe_trunc = [&](double g) {
        double gth = std::max(std::pow((1.0 + g) / s, pw) - 1.0, 0.0);
        if (gth == 0.0) return 0.0;
        if (std::isinf(gth)) return 1.0;
        double x = he * gth;
        double acc = 0.0;
        for (size_t t = 0; t < we.size(); ++t)
            acc += we[t] * specfun::reg_lower_gamma(eav.mu + t, x);
        return std::min(acc, 1.0);
    };

    const int npan =
        std::clamp(static_cast<int>(std::ceil((u - th) * h / 2.0)) + 8, 24, 512);
    const auto& gx = gl_nodes();
    const auto& gw = gl_weights();
    double acc = 0.0;
    for (int p = 0; p < npan; ++p) {
        double a = th + (u - th) * p / npan;
        double b = th + (u - th) * (p + 1) / npan;
        double cm = 0.5 * (a + b);
        double hl = 0.5 * (b - a);
        for (int j = 0; j < kPanelDegree; ++j) {
            double g = cm + hl * gx[j];
            double fe = fe_trunc(g);
            double fn = N == 1 ? fe : std::pow(fe, N);
            acc += gw[j] * hl * fn * fs_trunc(g);
        }
    }
    r.value = clamp01(acc);
    r.error = N * tail_e + tail_s + tail_u;
    return r;
}

double cdf_main_series(const SystemConfig& c, const NumericsConfig& n, double th,
                       int& terms) {
    const auto comp = main_composite(c);
    const double h = comp.rate();
    const double lam = comp.mu * comp.kappa;
    double tail = 0.0;
    auto w = poisson_weights(lam, 0.25 * n.series_budget.rel_tol,
                             n.series_budget.max_terms, n.fixed_terms, tail);
    terms = static_cast<int>(w.size());
    double acc = 0.0;
    for (size_t k = 0; k < w.size(); ++k)
        acc += w[k] * specfun::reg_lower_gamma(comp.mu + k, h * th);
    return clamp01(acc);
}

} // namespace

void SystemConfig::validate() const {
    require(L >= 1, "L must be >= 1");
    require(M >= 1, "M must be >= 1");
    require(N >= 1, "N must be >= 1");
    require(std::isfinite(rho) && rho >= 0.0 && rho <= 1.0, "rho must be in [0,1]");
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
            "alpha must be in [0,1]");
    require(std::isfinite(R_s) && R_s > 0.0, "R_s must be > 0");
    require(std::isfinite(sigma2_over_N0) && sigma2_over_N0 >= 0.0,
            "sigma2_over_N0 must be >= 0");
    require(std::isfinite(PL_s) && PL_s >= 1.0, "PL_s must be >= 1 (linear)");
    require(std::isfinite(PL_e) && PL_e >= 1.0, "PL_e must be >= 1 (linear)");
    main_branch.validate();
    eaves.validate();
}

void NumericsConfig::validate() const {
    series_budget.validate();
    require(std::isfinite(quad_rel_tol) && quad_rel_tol > 0.0 && quad_rel_tol <= 1e-3,
            "quad_rel_tol must be in (0, 1e-3]");
    require(std::isfinite(quad_abs_tol) && quad_abs_tol > 0.0 && quad_abs_tol <= 1e-3,
            "quad_abs_tol must be in (0, 1e-3]");
    require(std::isfinite(tail_cutoff_sigma) && tail_cutoff_sigma > 0.0 &&
                tail_cutoff_sigma <= 1000.0,
            "tail_cutoff_sigma must be in (0, 1000]");
    require(fixed_terms >= 0, "fixed_terms must be >= 1 when set");
}

double pathloss(double distance, double exponent, double gain_tx, double gain_rx,
                double wavelength) {
    require(std::isfinite(distance) && distance > 0.0, "pathloss: distance must be > 0");
    require(std::isfinite(exponent) && exponent > 0.0, "pathloss: exponent must be > 0");
    require(std::isfinite(gain_tx) && gain_tx > 0.0, "pathloss: gain_tx must be > 0");
    require(std::isfinite(gain_rx) && gain_rx > 0.0, "pathloss: gain_rx must be > 0");
    require(std::isfinite(wavelength) && wavelength > 0.0,
            "pathloss: wavelength must be > 0");
    double a = 4.0 * M_PI / (gain_tx * gain_rx * wavelength);
    return a * a * std::pow(distance, exponent);
}

double eaves_power_ratio(double rho, double sigma2_over_N0, double pl_e) {
    require(std::isfinite(rho) && rho >= 0.0 && rho <= 1.0,
            "eaves_power_ratio: rho must be in [0,1]");
    require(std::isfinite(sigma2_over_N0) && sigma2_over_N0 >= 0.0,
            "eaves_power_ratio: sigma2_over_N0 must be >= 0");
    require(std::isfinite(pl_e) && pl_e >= 1.0, "eaves_power_ratio: pl_e must be >= 1");
    if (rho == 0.0) return 0.0;
    return rho / (pl_e * (rho + sigma2_over_N0));
}

double gamma_threshold(double gamma_s, double R_s, double alpha) {
    require(std::isfinite(R_s) && R_s > 0.0, "gamma_threshold: R_s must be > 0");
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha < 1.0,
            "gamma_threshold: alpha must be in [0,1)");
    double th = threshold_snr(R_s);
    require(!std::isnan(gamma_s) && gamma_s >= th,
            "gamma_threshold: gamma_s must be >= 2^R_s - 1");
    if (std::isinf(gamma_s)) return kInf;
    double base = (1.0 + gamma_s) / std::exp2(R_s);
    return std::max(std::pow(base, 1.0 / (1.0 - alpha)) - 1.0, 0.0);
}

fading::KappaMuParams main_composite(const SystemConfig& c) {
    c.validate();
    auto comp = fading::mrc_composite(c.main_branch, c.M);
    double mean = c.mean_interpretation == MeanInterpretation::per_branch_times_M
                      ? comp.mean_snr
                      : c.main_branch.mean_snr;
    return {comp.kappa, comp.mu, mean / c.PL_s};
}

fading::KappaMuParams eaves_effective(const SystemConfig& c) {
    c.validate();
    double omega = eaves_power_ratio(c.rho, c.sigma2_over_N0, c.PL_e);
    require(omega > 0.0, "eaves_effective: rho = 0 leaves the eavesdropper without signal");
    return {c.eaves.kappa, c.eaves.mu, omega * c.eaves.mean_snr};
}

double p_eve_quadrature(const SystemConfig& c, const NumericsConfig& n) {
    c.validate();
    n.validate();
    require(c.alpha < 1.0, "p_eve_quadrature: alpha = 1 is handled by the caller");
    return quad_p_cov(c, n, 1).value;
}

double p_eve_series(const SystemConfig& c, const NumericsConfig& n) {
    c.validate();
    n.validate();
    require(c.alpha < 1.0, "p_eve_series: alpha = 1 is handled by the caller");
    require(c.main_branch.kappa > 0.0, "p_eve_series: kappa_s = 0 routes to quadrature");
    return series_p_cov(c, n, 1).value;
}

OutageResult secrecy_outage(const SystemConfig& c, const NumericsConfig& n, Method method) {
    c.validate();
    n.validate();
    OutageResult r;
    r.method = method;

    if (c.rho == 0.0 || c.alpha == 1.0) {
        // No information signal reaches the eavesdroppers (rho = 0) or the
        // information phase vanishes (alpha = 1): outage is pure transmission
        // failure and must match 1 - transmission_probability exactly.
        const auto comp = main_composite(c);
        double fs = fading::cdf(comp, threshold_snr(c.R_s), n.series_budget);
        r.p_cov_l = 1.0 - fs;
        r.p_out = std::pow(fs, c.L);
        r.p_eve = std::pow(r.p_cov_l, 1.0 / c.N);
        return r;
    }

    bool use_series = method == Method::series && c.main_branch.kappa > 0.0;
    r.method = use_series ? Method::series : Method::quadrature;
    CovResult cov = use_series ? series_p_cov(c, n, c.N) : quad_p_cov(c, n, c.N);
    r.p_cov_l = cov.value;
    r.terms_used_t = cov.terms_t;
    r.terms_used_v = cov.terms_v;
    r.quad_error_estimate = cov.error;
    r.p_out = std::pow(1.0 - cov.value, c.L);
    r.p_eve = std::pow(cov.value, 1.0 / c.N);
    return r;
}

double transmission_probability(const SystemConfig& c, const NumericsConfig& n) {
    c.validate();
    n.validate();
    const auto comp = main_composite(c);
    double fs = fading::cdf(comp, threshold_snr(c.R_s), n.series_budget);
    return 1.0 - std::pow(fs, c.L);
}

double transmission_probability_series(const SystemConfig& c, const NumericsConfig& n) {
    c.validate();
    n.validate();
    int terms = 0;
    double fs = cdf_main_series(c, n, threshold_snr(c.R_s), terms);
    return 1.0 - std::pow(fs, c.L);
}

double secrecy_throughput(const SystemConfig& c, const NumericsConfig& n) {
    return c.R_s * transmission_probability(c, n);
}

} // namespace swiptsec::secrecy
