#pragma once

// Named verification experiments. Each returns an ExperimentReport whose reference values
// are recomputed from the constants and extremal modules at run time.

#include "fracgrad/field.hpp"
#include "fracgrad/fracops.hpp"
#include "fracgrad/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fracgrad {

struct Tolerances {
    double identity = 1e-10;     ///< spectral identities, max relative error
    double closed_form = 1e-12;  ///< closed form vs closed form
    double quadrature = 0.02;    ///< closed form vs grid quadrature
    double stochastic = 0.05;    ///< random-family upper bounds
    double domination = 0.01;    ///< pointwise kernel domination
    double refinement = 0.05;    ///< growth allowed between N and 2N
    double cross_1d = 0.02;      ///< spectral vs direct, n = 1
    double cross_2d = 0.05;      ///< spectral vs direct, n >= 2
    double proportionality = 0.02;

    /// Overrides fields from a JSON object; unknown keys throw std::invalid_argument.
    void update(const nlohmann::json& overrides);
};

/// Max relative errors of -R.R = id, frac_gradient = R (-Delta)^{s/2}, -div^s frac_gradient = (2 pi |xi|)^{2s},
/// and I_s (-Delta)^{s/2} = id over `fields` random mean-zero band-limited fields. Requires 0 < s <= 1/2.
ExperimentReport identity_suite(const GridSpec& grid, double s, std::uint64_t seed, const Tolerances& tol = {},
                                int fields = 10);

/// Supercritical potential bound: closed-form extremal ratio, singular-corrected quadrature of
/// the power-cutoff extremal at N points per axis, and `competitors` random competitors.
ExperimentReport morrey_sobolev_experiment(int n, double p, double alpha, int N, std::uint64_t seed = 1,
                                           const Tolerances& tol = {}, int competitors = 20);

/// Weighted Hardy quotients of random bumps for both signs against the subcritical constants.
/// N = 0 picks 512, 128 or 64 points per axis for n = 1, 2, 3.
ExperimentReport hardy_experiment(int n, double s, double p, int samples, std::uint64_t seed, int N = 0,
                                  const Tolerances& tol = {});

/// Critical exponential bound: refinement stability at the threshold and the blowup
/// classification of the closed-form lower bound. Empty lists select the defaults
/// {0.9, 1, 1.1} x threshold and {1e-3, 1e-6, 1e-9}. N = 0 picks 256, 64 or 32.
ExperimentReport moser_experiment(int n, double s, std::vector<double> kappa_list, std::vector<double> r_list,
                                  std::uint64_t seed = 3, int N = 0, double eps = 0.01, const Tolerances& tol = {},
                                  int samples = 10);

/// Exponential integral of the potential of normalized L^{n/alpha} families over a ball.
/// Empty beta_list selects {0, 1/4, 1/2, 1} x n/omega_{n-1}.
ExperimentReport adams_experiment(int n, double alpha, std::vector<double> beta_list, int N,
                                  std::uint64_t seed = 5, const Tolerances& tol = {});

/// Random atomic measure with `atoms` atoms in [-1,1]^n.
AtomicMeasure random_atomic_measure(int n, int atoms, std::uint64_t seed);

/// Lower bound I_alpha mu(x) >= c_{n,alpha} mu(B(0,r)) (|x| + r)^{alpha-n} at `trials` random (x, r).
ExperimentReport measure_experiment(const AtomicMeasure& mu, double alpha, int trials, std::uint64_t seed,
                                    const Tolerances& tol = {});

/// Spectral vs direct quadrature for (-Delta)^{s/2}, the fractional gradient and c_{n,alpha} I_alpha on
/// Gaussians with support diameter L/4. N = 0 picks 512 (n = 1) or 128 (n = 2).
ExperimentReport cross_validation_experiment(int n, double s, double alpha, int N = 0, const Tolerances& tol = {});

/// |(-Delta)^{(1-s)/2} u| <= kappa_{-s} I_s(|grad u|) at every sample for random bumps.
ExperimentReport domination_experiment(int n, double s, int N, int samples, std::uint64_t seed,
                                       const Tolerances& tol = {});

/// 1-D one-sided derivatives: their sum and difference against the two-sided direct operators.
ExperimentReport liouville_experiment(double s, int N = 512, const Tolerances& tol = {});

/// Names accepted by run_named_experiment.
std::vector<std::string> experiment_names();

/// Runs an experiment from a JSON parameter object (unknown keys throw std::invalid_argument).
/// Missing keys take the documented defaults. Sets runtime_seconds.
ExperimentReport run_named_experiment(const std::string& name, const nlohmann::json& params, std::uint64_t seed,
                                      const Tolerances& tol = {});

}  // namespace fracgrad
