#pragma once

// Closed-form extremal families: power cutoffs f_beta = 1_B |x - x0|^beta, the profile
// h(beta) that selects the sharp exponent, the logarithmic cutoff u_r and the
// exponential blowup bound built from it.

#include <functional>

namespace fracgrad {

/// ||f_beta||_p = (omega_{n-1} / (beta p + n))^{1/p} r0^{beta + n/p}. Requires beta p + n > 0.
double power_cutoff_lp_norm(int n, double p, double beta, double r0);

/// I_alpha f_beta (x0) = omega_{n-1} r0^{alpha+beta} / (alpha + beta). Requires alpha + beta > 0.
double power_cutoff_potential_center(int n, double alpha, double beta, double r0);

/// h(beta) = (beta p + n) / (alpha + beta)^p for beta > -n/p, alpha p > n, p > 1.
double h_profile(int n, double p, double alpha, double beta);
/// -(n - alpha) / (p - 1)
double h_argmax(int n, double p, double alpha);
/// ((alpha p - n) / (p - 1))^{1-p}
double h_sup(int n, double p, double alpha);

/// Golden-section search for the maximizer of a unimodal function on [lo, hi].
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-10);

/// I_alpha f_beta(x0) / (|B|^{(alpha p - n)/(n p)} ||f_beta||_p) at beta = h_argmax, from closed forms.
/// Independent of r0; equals the Morrey constant.
double extremal_ratio(int n, double p, double alpha, double r0 = 1.0);

/// ||grad u_r||_{n/s} = (omega_{n-1} log(1/r))^{(s-n)/n}, r in (0,1).
double log_cutoff_grad_norm(int n, double s, double r);
/// u_r at distance |x| from the origin: |x|^{1-s} / ((1-s) omega_{n-1} log(1/r)) for r <= |x| < 1, else 0.
double log_cutoff_eval(int n, double s, double r, double radius);

/// Exponent n - omega_{n-1} (kappa kappa_{-s} (1 - eps))^{n/(n-s)} of the blowup bound.
double moser_blowup_exponent(int n, double s, double kappa, double eps = 0.01);
/// r^{moser_blowup_exponent}: lower bound for the normalized exponential integral along u_r.
double moser_blowup_lower_bound(int n, double s, double kappa, double r, double eps = 0.01);

struct GradientCutoff {
    double beta;
    double grad_norm;     ///< ||grad u_beta||_p = ||f_beta||_p
    double center_value;  ///< |g_beta(x0)| = kappa_{-s} omega_{n-1} r0^{beta+s} / (beta + s)
    double ratio;         ///< center_value / (|B|^{(sp-n)/(np)} grad_norm)
};

/// u_beta = (beta+1)^{-1} 1_B |x - x0|^{beta+1} and g_beta = (-Delta)^{(1-s)/2} u_beta.
/// At beta = -(n-s)/(p-1) the ratio equals the sharp supercritical constant for the minus sign.
GradientCutoff gradient_cutoff_family(int n, double p, double s, double beta, double r0);

}  // namespace fracgrad
