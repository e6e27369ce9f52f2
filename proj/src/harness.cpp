#include "fracgrad/harness.hpp"
#include "fracgrad/bumps.hpp"
#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fracgrad {

namespace {

using nlohmann::json;

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

// max|a - b| / max|b|, 0 when both vanish.
double rel_error(const ScalarField& a, const ScalarField& b) {
    const double diff = max_abs_diff(a, b);
    const double scale = b.max_abs();
    if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / scale;
}

double rel_error(const VectorField& a, const VectorField& b) {
    double diff = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) diff = std::max(diff, max_abs_diff(a[j], b[j]));
    const double scale = b.magnitude().max_abs();
    if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / scale;
}

// Relative sup difference restricted to a sample mask.
double rel_error_on(const std::vector<double>& a, const std::vector<double>& b, const std::vector<bool>& mask) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask[i]) continue;
        diff = std::max(diff, std::fabs(a[i] - b[i]));
        scale = std::max(scale, std::fabs(b[i]));
    }
    return scale == 0.0 ? diff : diff / scale;
}

std::vector<double> to_vector(const ScalarField& f) { return {f.values().begin(), f.values().end()}; }

GridSpec unit_grid(int n, int N) {
    GridSpec g;
    g.n = n;
    g.extent = 1.0;
    g.points = N;
    g.offset = true;
    g.validate();
    return g;
}

std::vector<std::size_t> samples_in(const GridSpec& g, const BallDomain& ball) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (ball.contains(g.point(i), g.n)) out.push_back(i);
    return out;
}

double norm_of(const Point& x, int n) {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += x[d] * x[d];
    return std::sqrt(r2);
}

ScalarField power_cutoff(const GridSpec& g, const Point& x0, double r0, double beta) {
    return sample(g, [&](const Point& x) {
        Point d{x[0] - x0[0], x[1] - x0[1], x[2] - x0[2]};
        const double r = norm_of(d, g.n);
        return r < r0 ? std::pow(r, beta) : 0.0;
    });
}

}  // namespace

void Tolerances::update(const json& overrides) {
    if (!overrides.is_object()) throw std::invalid_argument("tolerances: expected an object");
    const std::map<std::string, double*> fields = {
        {"identity", &identity},       {"closed_form", &closed_form}, {"quadrature", &quadrature},
        {"stochastic", &stochastic},   {"domination", &domination},   {"refinement", &refinement},
        {"cross_1d", &cross_1d},       {"cross_2d", &cross_2d},       {"proportionality", &proportionality},
    };
    for (const auto& [key, value] : overrides.items()) {
        auto it = fields.find(key);
        if (it == fields.end()) throw std::invalid_argument("tolerances: unknown key '" + key + "'");
        if (!value.is_number() || value.get<double>() < 0.0)
            throw std::invalid_argument("tolerances: '" + key + "' must be a non-negative number");
        *it->second = value.get<double>();
    }
}

// ---------------------------------------------------------------------------

ExperimentReport identity_suite(const GridSpec& grid, double s, std::uint64_t seed, const Tolerances& tol,
                                int fields) {
    grid.validate();
    if (!(s > 0.0 && s <= 0.5)) throw DomainError("identity_suite: s must lie in (0, 1/2]");
    ExperimentReport rep("identity_suite", seed);
    rep.param("n", grid.n);
    rep.param("N", grid.points);
    rep.param("L", grid.extent);
    rep.param("s", s);
    rep.param("fields", fields);

    std::mt19937_64 rng(seed);
    double e_riesz = 0.0, e_factor = 0.0, e_div = 0.0, e_potential = 0.0;
    for (int k = 0; k < fields; ++k) {
        const ScalarField u = random_band_limited(grid, rng);

        ScalarField rr = ScalarField::zeros(grid);
        for (int j = 0; j < grid.n; ++j)
            rr = rr + riesz_transform(riesz_transform(u, j, ZeroModePolicy::Reject), j, ZeroModePolicy::Reject);
        e_riesz = std::max(e_riesz, rel_error(-1.0 * rr, u));

        const VectorField grad = frac_gradient(u, s);
        const ScalarField lap = frac_laplacian(u, s);
        std::vector<ScalarField> composed;
        for (int j = 0; j < grid.n; ++j) composed.push_back(riesz_transform(lap, j, ZeroModePolicy::Reject));
        e_factor = std::max(e_factor, rel_error(grad, VectorField(std::move(composed))));

        const ScalarField div = -1.0 * frac_divergence(grad, s);
        e_div = std::max(e_div, rel_error(div, apply_radial_power(u, 2.0 * s)));

        e_potential = std::max(e_potential, rel_error(riesz_potential(lap, s, ZeroModePolicy::Reject), u));
    }
    const auto P = Provenance::ClosedForm;
    const auto A = Relation::Absolute;
    rep.check("-R.R u = u", e_riesz, 0.0, P, A, tol.identity);
    rep.check("frac_gradient = R (-Delta)^{s/2}", e_factor, 0.0, P, A, tol.identity);
    rep.check("-div^s frac_gradient = (-Delta)^s", e_div, 0.0, P, A, tol.identity);
    rep.check("I_s (-Delta)^{s/2} u = u", e_potential, 0.0, P, A, tol.identity);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport morrey_sobolev_experiment(int n, double p, double alpha, int N, std::uint64_t seed,
                                           const Tolerances& tol, int competitors) {
    if (n < 1 || n > 3) throw DomainError("morrey_sobolev_experiment: n must be 1, 2 or 3");
    const double c = morrey_constant(n, p, alpha);  // throws RegimeError outside alpha p > n
    ExperimentReport rep("morrey_sobolev", seed);
    rep.param("n", n);
    rep.param("p", p);
    rep.param("alpha", alpha);
    rep.param("N", N);
    rep.param("competitors", competitors);

    rep.check("extremal_ratio", extremal_ratio(n, p, alpha), c, Provenance::Constant, Relation::Relative,
              tol.closed_form);

    const GridSpec g = unit_grid(n, N);
    const Point x0{0.0, 0.0, 0.0};
    const double r0 = g.extent / 8.0;
    const BallDomain ball{x0, r0};
    const double beta = h_argmax(n, p, alpha);
    const double ball_factor = std::pow(ball_volume(n, r0), (alpha * p - n) / (n * p));

    const ScalarField f = power_cutoff(g, x0, r0, beta);
    const double e_pot = alpha + beta - n;
    const double e_norm = beta * p;
    const double pot_raw = riesz_potential_at(f, alpha, x0);
    const double pot = pot_raw - singular_quadrature_correction(g, x0, e_pot);
    const double mass_raw = std::pow(lp_norm(f, p), p);
    const double norm = std::pow(mass_raw - singular_quadrature_correction(g, x0, e_norm), 1.0 / p);
    const double norm_raw = std::pow(mass_raw, 1.0 / p);

    rep.check("quadrature potential at centre", pot, power_cutoff_potential_center(n, alpha, beta, r0),
              Provenance::ClosedForm, Relation::Relative, tol.quadrature);
    rep.check("quadrature L^p norm", norm, power_cutoff_lp_norm(n, p, beta, r0), Provenance::ClosedForm,
              Relation::Relative, tol.quadrature);
    rep.check("quadrature extremal ratio", pot / (ball_factor * norm), c, Provenance::Constant, Relation::Relative,
              tol.quadrature);
    rep.note("uncorrected quadrature extremal ratio", pot_raw / (ball_factor * norm_raw));

    // Competitors supported in the ball: the sup of the potential is taken over ball samples.
    const std::vector<std::size_t> inside = samples_in(g, ball);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < competitors; ++k) {
        ScalarField h = ScalarField::zeros(g);
        switch (k % 3) {
            case 0: {  // indicator of a sub-ball
                const double rad = uniform(rng, 0.3, 1.0) * r0;
                Point c0{0.0, 0.0, 0.0};
                for (int d = 0; d < n; ++d) c0[d] = uniform(rng, -1.0, 1.0) * (r0 - rad) / std::sqrt(double(n));
                h = power_cutoff(g, c0, rad, 0.0);
                break;
            }
            case 1: {  // non-extremal power cutoff
                const double b = uniform(rng, 0.0, 1.0);
                h = power_cutoff(g, x0, r0, b);
                break;
            }
            default: {
                const Bump bump = random_bump(n, g.extent, rng, x0, r0);
                h = bump.sample(g);
            }
        }
        if (h.max_abs() == 0.0) continue;
        const std::vector<double> pot_in = riesz_potential_direct_at(h, alpha, inside);
        double sup = 0.0;
        for (double v : pot_in) sup = std::max(sup, std::fabs(v));
        const double ratio = sup / (ball_factor * lp_norm(h, p));
        worst = std::max(worst, ratio);
        if (k == 0) rep.check("indicator competitor ratio", ratio, c, Provenance::Constant, Relation::Below, 0.0);
    }
    rep.check("max competitor ratio", worst, c, Provenance::Constant, Relation::AtMost, tol.quadrature);
    rep.note("competitor margin", worst / c);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport hardy_experiment(int n, double s, double p, int samples, std::uint64_t seed, int N,
                                  const Tolerances& tol) {
    if (n < 1 || n > 3) throw DomainError("hardy_experiment: n must be 1, 2 or 3");
    if (classify_regime(n, s, p) != Regime::Subcritical) throw RegimeError("hardy_experiment: requires s p < n");
    const double k_plus = twin_constant(n, p, s, Sign::Plus);
    const double k_minus = twin_constant(n, p, s, Sign::Minus);
    if (N == 0) N = n == 1 ? 512 : (n == 2 ? 128 : 64);
    ExperimentReport rep("hardy", seed);
    rep.param("n", n);
    rep.param("s", s);
    rep.param("p", p);
    rep.param("samples", samples);
    rep.param("N", N);

    const GridSpec g = unit_grid(n, N);
    std::mt19937_64 rng(seed);
    double max_plus = 0.0, max_minus = 0.0;
    double min_q = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const ScalarField u = random_bump(n, g.extent, rng).sample(g);
        const double qp = hardy_quotient(u, frac_laplacian(u, s), s, p);
        const double qm = hardy_quotient(u, frac_gradient(u, s), s, p);
        max_plus = std::max(max_plus, qp);
        max_minus = std::max(max_minus, qm);
        min_q = std::min({min_q, qp, qm});
    }
    rep.check("max quotient, (-Delta)^{s/2}", max_plus, k_plus, Provenance::Constant, Relation::AtMost,
              tol.stochastic);
    rep.check("max quotient, fractional gradient", max_minus, k_minus, Provenance::Constant, Relation::AtMost,
              tol.stochastic);
    rep.check("min quotient", min_q, 0.0, Provenance::ClosedForm, Relation::Above, 0.0);
    rep.note("margin, (-Delta)^{s/2}", max_plus / k_plus);
    rep.note("margin, fractional gradient", max_minus / k_minus);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport moser_experiment(int n, double s, std::vector<double> kappa_list, std::vector<double> r_list,
                                  std::uint64_t seed, int N, double eps, const Tolerances& tol, int samples) {
    if (n < 1 || n > 3) throw DomainError("moser_experiment: n must be 1, 2 or 3");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("moser_experiment: s must lie in (0,1)");
    const double p = n / s;
    const double threshold = twin_constant(n, p, s, Sign::Minus);
    const double k_minus = kernel_constants(n, s).kappa_minus_s;
    if (kappa_list.empty()) kappa_list = {0.9 * threshold, threshold, 1.1 * threshold};
    if (r_list.empty()) r_list = {1e-3, 1e-6, 1e-9};
    std::sort(r_list.begin(), r_list.end(), std::greater<>());
    if (N == 0) N = n == 1 ? 256 : (n == 2 ? 64 : 32);

    ExperimentReport rep("moser", seed);
    rep.param("n", n);
    rep.param("s", s);
    rep.param("kappa", kappa_list);
    rep.param("r", r_list);
    rep.param("N", N);
    rep.param("eps", eps);
    rep.param("samples", samples);

    rep.check("threshold identity", threshold * k_minus, std::pow(n / sphere_area(n), (n - s) / n),
              Provenance::ClosedForm, Relation::Relative, tol.closed_form);

    // (a) boundedness at the threshold across N and 2N on (-Delta)^{(1-s)/2} of bumps in the ball.
    const BallDomain omega{{0.0, 0.0, 0.0}, 0.125};
    std::mt19937_64 rng(seed);
    std::vector<Bump> bumps;
    for (int k = 0; k < samples; ++k) bumps.push_back(random_bump(n, 1.0, rng, omega.center, omega.radius));
    auto functional = [&](const Bump& b, int points) {
        const GridSpec g = unit_grid(n, points);
        const ScalarField g_field = frac_laplacian(b.sample(g), 1.0 - s);
        const double denom = lp_norm(frac_gradient(g_field, s), p);
        return moser_functional(g_field, omega, denom, threshold, s);
    };
    double growth = 0.0, ceiling = 0.0, floor_value = std::numeric_limits<double>::infinity();
    for (const auto& b : bumps) {
        const double coarse = functional(b, N);
        const double fine = functional(b, 2 * N);
        growth = std::max(growth, fine / coarse);
        ceiling = std::max({ceiling, coarse, fine});
        floor_value = std::min({floor_value, coarse, fine});
    }
    if (!bumps.empty()) {
        rep.check("max refinement growth N -> 2N", growth, 1.0, Provenance::Oracle, Relation::AtMost,
                  tol.refinement);
        rep.check("min functional value", floor_value, 1.0, Provenance::ClosedForm, Relation::AtLeast, 0.0);
        rep.note("recorded ceiling", ceiling);
    }

    // (b) classification of the closed-form blowup bound, eps -> 0 exponent.
    for (double kappa : kappa_list) {
        const double e0 = moser_blowup_exponent(n, s, kappa, 0.0);
        const int observed = std::fabs(e0) <= 1e-9 * n ? 0 : (e0 < 0.0 ? 1 : -1);
        const double t = kappa / threshold - 1.0;
        const int expected = std::fabs(t) <= 1e-9 ? 0 : (t > 0.0 ? 1 : -1);
        rep.check("classification kappa=" + num(kappa) + " (1 divergent, 0 flat, -1 vanishing)", observed, expected,
                  Provenance::Constant, Relation::Absolute, 0.0);

        const double e = moser_blowup_exponent(n, s, kappa, eps);
        std::vector<double> bounds;
        for (double r : r_list) {
            bounds.push_back(moser_blowup_lower_bound(n, s, kappa, r, eps));
            rep.note("bound kappa=" + num(kappa) + " r=" + num(r), bounds.back());
        }
        if (bounds.size() >= 2 && e != 0.0) {
            // Bounds along decreasing r must move monotonically in the direction fixed by the exponent.
            for (std::size_t i = 1; i < bounds.size(); ++i)
                rep.check("bound trend kappa=" + num(kappa) + " r=" + num(r_list[i]), bounds[i], bounds[i - 1],
                          Provenance::ClosedForm, e < 0.0 ? Relation::Above : Relation::Below, 0.0);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport adams_experiment(int n, double alpha, std::vector<double> beta_list, int N, std::uint64_t seed,
                                  const Tolerances& tol) {
    (void)tol;
    if (n < 1 || n > 3) throw DomainError("adams_experiment: n must be 1, 2 or 3");
    if (!(alpha > 0.0 && alpha < n)) throw RegimeError("adams_experiment: alpha must lie in (0, n)");
    const double p = n / alpha;
    const double threshold = adams_threshold(n);
    if (beta_list.empty()) beta_list = {0.0, 0.25 * threshold, 0.5 * threshold, threshold};
    std::sort(beta_list.begin(), beta_list.end());
    for (double b : beta_list)
        if (!(b >= 0.0)) throw DomainError("adams_experiment: beta values must be >= 0");

    ExperimentReport rep("adams", seed);
    rep.param("n", n);
    rep.param("alpha", alpha);
    rep.param("beta", beta_list);
    rep.param("N", N);

    const GridSpec g = unit_grid(n, N);
    const double r0 = 0.125;
    const BallDomain omega{{0.0, 0.0, 0.0}, r0};
    const std::vector<std::size_t> inside = samples_in(g, omega);

    struct Member {
        std::string label;
        ScalarField f;
    };
    std::vector<Member> family;
    family.push_back({"indicator r0", power_cutoff(g, omega.center, r0, 0.0)});
    family.push_back({"indicator r0/2", power_cutoff(g, omega.center, 0.5 * r0, 0.0)});
    family.push_back({"indicator r0/4", power_cutoff(g, omega.center, 0.25 * r0, 0.0)});
    family.push_back({"power -alpha/4", power_cutoff(g, omega.center, r0, -0.25 * alpha)});
    family.push_back({"power -alpha/2", power_cutoff(g, omega.center, r0, -0.5 * alpha)});

    for (const auto& m : family) {
        const ScalarField f = (1.0 / lp_norm(m.f, p)) * m.f;
        const std::vector<double> pot = riesz_potential_direct_at(f, alpha, inside);
        std::vector<double> full(g.size(), 0.0);
        for (std::size_t k = 0; k < inside.size(); ++k) full[inside[k]] = pot[k];
        const ScalarField potential(g, std::move(full));
        double previous = 0.0;
        for (std::size_t i = 0; i < beta_list.size(); ++i) {
            const double beta = beta_list[i];
            const double kappa = std::pow(beta, (n - alpha) / n);
            const double value = moser_functional(potential, omega, 1.0, kappa, alpha);
            if (beta == 0.0)
                rep.check(m.label + ": beta=0", value, 1.0, Provenance::ClosedForm, Relation::Absolute, 0.0);
            if (i > 0)
                rep.check(m.label + ": nondecreasing at beta=" + num(beta), value, previous, Provenance::ClosedForm,
                          Relation::AtLeast, 0.0);
            if (std::fabs(beta - threshold) <= 1e-12 * threshold) {
                rep.check(m.label + ": finite at threshold", value, std::numeric_limits<double>::max(),
                          Provenance::ClosedForm, Relation::Below, 0.0);
                rep.note(m.label + ": value at threshold", value);
            }
            previous = value;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

AtomicMeasure random_atomic_measure(int n, int atoms, std::uint64_t seed) {
    AtomicMeasure mu;
    mu.n = n;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < atoms; ++k) {
        Atom a;
        for (int d = 0; d < n; ++d) a.location[d] = uniform(rng, -1.0, 1.0);
        a.mass = uniform(rng, 0.1, 1.0);
        mu.atoms.push_back(a);
    }
    mu.validate();
    return mu;
}

ExperimentReport measure_experiment(const AtomicMeasure& mu, double alpha, int trials, std::uint64_t seed,
                                    const Tolerances& tol) {
    (void)tol;
    mu.validate();
    const int n = mu.n;
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("measure_experiment: alpha must lie in (0, n)");
    ExperimentReport rep("measure", seed);
    rep.param("n", n);
    rep.param("alpha", alpha);
    rep.param("atoms", static_cast<int>(mu.atoms.size()));
    rep.param("trials", trials);

    const double c = riesz_normalizer(n, alpha);
    std::mt19937_64 rng(seed);
    int violations = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        Point x{0.0, 0.0, 0.0};
        for (int d = 0; d < n; ++d) x[d] = uniform(rng, -2.0, 2.0);
        const double r = uniform(rng, 0.0, 2.0);
        const double lhs = potential_of_measure(mu, alpha, x);
        const double rhs = c * mu.ball_mass({0.0, 0.0, 0.0}, r) * std::pow(norm_of(x, n) + r, alpha - n);
        if (lhs < rhs * (1.0 - 1e-12)) ++violations;
        if (rhs > 0.0 && std::isfinite(lhs)) min_ratio = std::min(min_ratio, lhs / rhs);
    }
    rep.check("violations", violations, 0.0, Provenance::ClosedForm, Relation::Absolute, 0.0);
    if (std::isfinite(min_ratio))
        rep.check("min potential / bound", min_ratio, 1.0, Provenance::ClosedForm, Relation::AtLeast, 1e-12);
    rep.note("measure strength", measure_strength(mu, alpha));
    rep.note("total mass", mu.total_mass());
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport cross_validation_experiment(int n, double s, double alpha, int N, const Tolerances& tol) {
    if (n < 1 || n > 2) throw DomainError("cross_validation_experiment: n must be 1 or 2");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("cross_validation_experiment: s must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < std::min(1.0, double(n))))
        throw DomainError("cross_validation_experiment: alpha must lie in (0, min(1, n))");
    if (N == 0) N = n == 1 ? 512 : 128;
    ExperimentReport rep("cross_validation", 0);
    rep.param("n", n);
    rep.param("s", s);
    rep.param("alpha", alpha);
    rep.param("N", N);

    const GridSpec g = unit_grid(n, N);
    const double sigma = n == 1 ? g.extent / 48.0 : g.extent / 32.0;
    const double bound = n == 1 ? tol.cross_1d : tol.cross_2d;
    const ScalarField u = gaussian(g, sigma);
    std::vector<bool> support(g.size());
    const double cut = 1e-3 * u.max_abs();
    for (std::size_t i = 0; i < g.size(); ++i) support[i] = std::fabs(u[i]) >= cut;

    const DirectResult lap_direct = frac_laplacian_direct(u, s);
    const ScalarField lap_spec = frac_laplacian(u, s);
    rep.check("(-Delta)^{s/2}: spectral vs direct", rel_error_on(to_vector(lap_spec), to_vector(lap_direct.value), support),
              0.0, Provenance::Oracle, Relation::Absolute, bound);
    rep.note("(-Delta)^{s/2}: direct tail estimate", lap_direct.tail_estimate);

    const DirectVectorResult grad_direct = frac_gradient_direct(u, s);
    const VectorField grad_spec = frac_gradient(u, s);
    double grad_err = 0.0, grad_scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!support[i]) continue;
        double d2 = 0.0, b2 = 0.0;
        for (int j = 0; j < n; ++j) {
            d2 += std::pow(grad_spec[j][i] - grad_direct.value[j][i], 2);
            b2 += std::pow(grad_direct.value[j][i], 2);
        }
        grad_err = std::max(grad_err, std::sqrt(d2));
        grad_scale = std::max(grad_scale, std::sqrt(b2));
    }
    rep.check("fractional gradient: spectral vs direct", grad_err / grad_scale, 0.0, Provenance::Oracle,
              Relation::Absolute, bound);

    // Mean-zero pair of bumps for the potential.
    Point shift{0.0, 0.0, 0.0};
    shift[0] = g.extent / 16.0;
    const ScalarField pair = gaussian(g, sigma, shift) - gaussian(g, sigma, {-shift[0], 0.0, 0.0});
    std::vector<bool> pair_support(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) pair_support[i] = std::fabs(pair[i]) >= cut;
    const ScalarField pot_spec = riesz_potential(pair, alpha);
    const ScalarField pot_direct = riesz_normalizer(n, alpha) * riesz_potential_direct(pair, alpha);
    rep.check("c_{n,alpha} I_alpha: spectral vs direct", rel_error_on(to_vector(pot_spec), to_vector(pot_direct), pair_support),
              0.0, Provenance::Oracle, Relation::Absolute, bound);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport domination_experiment(int n, double s, int N, int samples, std::uint64_t seed,
                                       const Tolerances& tol) {
    if (n < 1 || n > 3) throw DomainError("domination_experiment: n must be 1, 2 or 3");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("domination_experiment: s must lie in (0,1)");
    const double k_minus = kernel_constants(n, s).kappa_minus_s;
    ExperimentReport rep("domination", seed);
    rep.param("n", n);
    rep.param("s", s);
    rep.param("N", N);
    rep.param("samples", samples);

    const GridSpec g = unit_grid(n, N);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const ScalarField u = random_bump(n, g.extent, rng).sample(g);
        const ScalarField lhs = frac_laplacian(u, 1.0 - s);
        const ScalarField rhs = k_minus * riesz_potential_direct(spectral_gradient(u).magnitude(), s);
        for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::fabs(lhs[i]) / rhs[i]);
    }
    rep.check("max |(-Delta)^{(1-s)/2} u| / (kappa_{-s} I_s |grad u|)", worst, 1.0, Provenance::Constant,
              Relation::AtMost, tol.domination);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport liouville_experiment(double s, int N, const Tolerances& tol) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("liouville_experiment: s must lie in (0,1)");
    ExperimentReport rep("liouville", 0);
    rep.param("s", s);
    rep.param("N", N);

    const GridSpec g = unit_grid(1, N);
    const ScalarField u = gaussian(g, g.extent / 48.0);
    const ScalarField plus = liouville_onesided(u, s, Sign::Plus);
    const ScalarField minus = liouville_onesided(u, s, Sign::Minus);
    const ScalarField lap = frac_laplacian_direct(u, s).value;
    const ScalarField grad = frac_gradient_direct(u, s).value[0];

    auto ratio_stats = [&](const ScalarField& a, const ScalarField& b) {
        const double cut = 0.1 * b.max_abs();
        std::vector<double> r;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::fabs(b[i]) >= cut) r.push_back(a[i] / b[i]);
        double mean = 0.0;
        for (double v : r) mean += v;
        mean /= static_cast<double>(r.size());
        double var = 0.0;
        for (double v : r) var += (v - mean) * (v - mean);
        return std::pair<double, double>{mean, std::sqrt(var / static_cast<double>(r.size())) / std::fabs(mean)};
    };
    const auto [sum_mean, sum_cv] = ratio_stats(plus + minus, lap);
    const auto [diff_mean, diff_cv] = ratio_stats(plus - minus, grad);
    const double pi = std::acos(-1.0);
    rep.check("sum / (-Delta)^{s/2}: coefficient of variation", sum_cv, 0.0, Provenance::Oracle, Relation::Absolute,
              tol.proportionality);
    rep.check("difference / fractional gradient: coefficient of variation", diff_cv, 0.0, Provenance::Oracle,
              Relation::Absolute, tol.proportionality);
    rep.check("sum / (-Delta)^{s/2}", sum_mean, 2.0 * std::cos(0.5 * pi * s), Provenance::ClosedForm,
              Relation::Relative, tol.proportionality);
    rep.check("difference / fractional gradient", diff_mean, 2.0 * std::sin(0.5 * pi * s), Provenance::ClosedForm,
              Relation::Relative, tol.proportionality);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

class Params {
public:
    Params(const json& j, std::set<std::string> allowed) : j_(j.is_null() ? json::object() : j) {
        if (!j_.is_object()) throw std::invalid_argument("experiment parameters must be an object");
        for (const auto& [key, value] : j_.items()) {
            (void)value;
            if (!allowed.count(key)) throw std::invalid_argument("unknown parameter '" + key + "'");
        }
    }

    template <typename T>
    T get(const std::string& key, T fallback) const {
        if (!j_.contains(key)) return fallback;
        try {
            return j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument("parameter '" + key + "' has the wrong type");
        }
    }

private:
    json j_;
};

}  // namespace

std::vector<std::string> experiment_names() {
    return {"identity_suite", "morrey_sobolev", "hardy", "moser", "adams", "measure", "cross_validation",
            "domination", "liouville"};
}

ExperimentReport run_named_experiment(const std::string& name, const json& params, std::uint64_t seed,
                                      const Tolerances& tol) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](ExperimentReport rep) {
        rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    };

    if (name == "identity_suite") {
        const Params p(params, {"n", "N", "L", "s", "fields"});
        GridSpec g;
        g.n = p.get("n", 2);
        g.points = p.get("N", 64);
        g.extent = p.get("L", 1.0);
        g.offset = true;
        return finish(identity_suite(g, p.get("s", 0.4), seed, tol, p.get("fields", 10)));
    }
    if (name == "morrey_sobolev") {
        const Params p(params, {"n", "p", "alpha", "N", "competitors"});
        return finish(morrey_sobolev_experiment(p.get("n", 2), p.get("p", 3.0), p.get("alpha", 1.0), p.get("N", 256),
                                                seed, tol, p.get("competitors", 20)));
    }
    if (name == "hardy") {
        const Params p(params, {"n", "s", "p", "samples", "N"});
        return finish(hardy_experiment(p.get("n", 3), p.get("s", 0.5), p.get("p", 2.0), p.get("samples", 50), seed,
                                       p.get("N", 0), tol));
    }
    if (name == "moser") {
        const Params p(params, {"n", "s", "kappa", "r", "N", "eps", "samples"});
        return finish(moser_experiment(p.get("n", 2), p.get("s", 0.5), p.get("kappa", std::vector<double>{}),
                                       p.get("r", std::vector<double>{}), seed, p.get("N", 0), p.get("eps", 0.01), tol,
                                       p.get("samples", 10)));
    }
    if (name == "adams") {
        const Params p(params, {"n", "alpha", "beta", "N"});
        return finish(adams_experiment(p.get("n", 2), p.get("alpha", 1.0), p.get("beta", std::vector<double>{}),
                                       p.get("N", 128), seed, tol));
    }
    if (name == "measure") {
        const Params p(params, {"n", "alpha", "atoms", "trials"});
        const int n = p.get("n", 2);
        const AtomicMeasure mu = random_atomic_measure(n, p.get("atoms", 5), seed);
        return finish(measure_experiment(mu, p.get("alpha", 1.0), p.get("trials", 100), seed, tol));
    }
    if (name == "cross_validation") {
        const Params p(params, {"n", "s", "alpha", "N"});
        return finish(cross_validation_experiment(p.get("n", 1), p.get("s", 0.5), p.get("alpha", 0.5), p.get("N", 0), tol));
    }
    if (name == "domination") {
        const Params p(params, {"n", "s", "N", "samples"});
        return finish(domination_experiment(p.get("n", 2), p.get("s", 0.5), p.get("N", 128), p.get("samples", 10), seed, tol));
    }
    if (name == "liouville") {
        const Params p(params, {"s", "N"});
        return finish(liouville_experiment(p.get("s", 0.5), p.get("N", 512), tol));
    }
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

}  // namespace fracgrad
