#include <doctest.h>

#include "fracgrad/bumps.hpp"
#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/fracops.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace fracgrad;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_diff(const ScalarField& a, const ScalarField& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("fractional laplacian of a plane wave") {
    const GridSpec g{2, 2.0, 32, true};
    const ScalarField u = sample(g, [](const Point& x) { return std::sin(kTwoPi * (3.0 * x[0] + 2.0 * x[1]) / 2.0); });
    const double s = 0.7;
    const double lambda = std::pow(kTwoPi * std::sqrt(13.0) / 2.0, s);
    CHECK(max_diff(frac_laplacian(u, s), lambda * u) < 1e-12 * lambda);
    CHECK(max_diff(riesz_potential(u, s), (1.0 / lambda) * u) < 1e-13);
}

TEST_CASE("riesz transform maps cosine to sine") {
    const GridSpec g{1, 1.0, 64, true};
    const ScalarField c = sample(g, [](const Point& x) { return std::cos(kTwoPi * 5.0 * x[0]); });
    const ScalarField s = sample(g, [](const Point& x) { return std::sin(kTwoPi * 5.0 * x[0]); });
    CHECK(max_diff(riesz_transform(c, 0), s) < 1e-13);
    CHECK(max_diff(riesz_transform(s, 0), -1.0 * c) < 1e-13);
}

TEST_CASE("spectral gradient of a plane wave") {
    const GridSpec g{2, 1.0, 32, false};
    const ScalarField u = sample(g, [](const Point& x) { return std::sin(kTwoPi * x[1]); });
    const ScalarField du = sample(g, [](const Point& x) { return kTwoPi * std::cos(kTwoPi * x[1]); });
    const VectorField grad = spectral_gradient(u);
    CHECK(grad[0].max_abs() < 1e-12);
    CHECK(max_diff(grad[1], du) < 1e-11);
}

TEST_CASE("fractional gradient tends to minus the gradient as s -> 1") {
    const GridSpec g{1, 1.0, 64, true};
    const ScalarField u = sample(g, [](const Point& x) { return std::sin(kTwoPi * 2.0 * x[0]); });
    const double s = 1.0 - 1e-9;
    CHECK(max_diff(frac_gradient(u, s)[0], -1.0 * spectral_gradient(u)[0]) < 1e-6);
}

TEST_CASE("zero mode policy") {
    const GridSpec g{1, 1.0, 32, true};
    const ScalarField one(g, std::vector<double>(g.size(), 1.0));
    CHECK_THROWS_AS(frac_laplacian(one, -0.5), PreconditionError);
    CHECK_THROWS_AS(riesz_potential(one, 0.5, ZeroModePolicy::Reject), PreconditionError);
    CHECK_THROWS_AS(riesz_transform(one, 0, ZeroModePolicy::Reject), PreconditionError);
    CHECK(riesz_potential(one, 0.5, ZeroModePolicy::Zero).max_abs() < 1e-15);
    // positive orders annihilate the mean without a precondition
    CHECK(frac_laplacian(one, 0.5).max_abs() < 1e-15);
    CHECK(max_diff(frac_laplacian(one, 0.0), one) == 0.0);
}

TEST_CASE("operator argument checks") {
    const GridSpec g{2, 1.0, 16, true};
    const ScalarField u = ScalarField::zeros(g);
    CHECK_THROWS_AS(frac_laplacian(u, 1.5), DomainError);
    CHECK_THROWS_AS(riesz_potential(u, 2.0), DomainError);
    CHECK_THROWS_AS(riesz_transform(u, 2), DomainError);
    CHECK_THROWS_AS(frac_gradient(u, 0.0), DomainError);
    CHECK_THROWS_AS(frac_divergence(VectorField({u}), 0.5), StructuralError);
}

TEST_CASE("multiplier composition and diagnostics") {
    std::mt19937_64 rng(4);
    const GridSpec g{2, 1.0, 32, true};
    const ScalarField u = random_band_limited(g, rng);
    SpectralDiagnostics diag;
    const ScalarField composed = apply_multipliers(
        u, {MultiplierSymbol::frac_laplacian(0.3), MultiplierSymbol::riesz_potential(0.3)}, &diag);
    CHECK(max_diff(composed, u) < 1e-12 * u.max_abs());
    CHECK(diag.imag_residue < 1e-12);
    CHECK(std::fabs(diag.input_mean) < 1e-14);
    CHECK(MultiplierSymbol::riesz_transform(0).odd());
    CHECK_FALSE(MultiplierSymbol::frac_laplacian(0.5).singular_at_zero());
    CHECK(MultiplierSymbol::riesz_potential(0.5).singular_at_zero());
}

TEST_CASE("radial power composes with the fractional laplacian") {
    std::mt19937_64 rng(8);
    const GridSpec g{3, 1.0, 16, true};
    const ScalarField u = random_band_limited(g, rng, 4);
    CHECK(max_diff(apply_radial_power(u, 0.8), frac_laplacian(frac_laplacian(u, 0.4), 0.4)) < 1e-10 * u.max_abs());
}

TEST_CASE("spectral operators are deterministic across calls") {
    std::mt19937_64 rng(5);
    const GridSpec g{2, 1.0, 64, true};
    const ScalarField u = random_band_limited(g, rng);
    const ScalarField a = frac_laplacian(u, 0.37), b = frac_laplacian(u, 0.37);
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}

TEST_CASE("direct potential of an interval indicator") {
    const GridSpec g{1, 1.0, 512, true};
    const double a = 0.25, alpha = 0.5;
    const ScalarField f = sample(g, [&](const Point& x) { return std::fabs(x[0]) < a ? 1.0 : 0.0; });
    // integral of |y|^{alpha-1} over (-a, a)
    const double exact = 2.0 * std::pow(a, alpha) / alpha;
    const ScalarField p = riesz_potential_direct(f, alpha);
    CHECK(p[g.points / 2] == Approx(exact).epsilon(0.02));
    const double off = riesz_potential_at(f, alpha, {0.0, 0.0, 0.0});
    CHECK(off == Approx(exact).epsilon(0.02));
    CHECK(riesz_potential_direct_at(f, alpha, {256})[0] == p[256]);
}

TEST_CASE("direct laplacian matches the spectral one on a narrow gaussian") {
    const GridSpec g{1, 1.0, 512, true};
    const ScalarField u = gaussian(g, 1.0 / 48.0);
    const double s = 0.5;
    const DirectResult d = frac_laplacian_direct(u, s);
    const ScalarField spec = frac_laplacian(u, s);
    CHECK(max_diff(d.value, spec) < 0.02 * spec.max_abs());
    CHECK(d.tail_estimate > 0.0);
    const DirectVectorResult gd = frac_gradient_direct(u, s);
    const ScalarField gs = frac_gradient(u, s)[0];
    CHECK(max_diff(gd.value[0], gs) < 0.02 * gs.max_abs());
}

TEST_CASE("one-sided derivatives combine into the two-sided ones") {
    const GridSpec g{1, 1.0, 256, true};
    const ScalarField u = gaussian(g, 1.0 / 32.0);
    const double s = 0.4;
    const ScalarField plus = liouville_onesided(u, s, Sign::Plus);
    const ScalarField minus = liouville_onesided(u, s, Sign::Minus);
    const ScalarField lap = frac_laplacian_direct(u, s).value;
    const ScalarField grad = frac_gradient_direct(u, s).value[0];
    const double c = 2.0 * std::cos(std::numbers::pi * s / 2.0), sn = 2.0 * std::sin(std::numbers::pi * s / 2.0);
    CHECK(max_diff(plus + minus, c * lap) < 1e-10 * lap.max_abs());
    CHECK(max_diff(plus - minus, sn * grad) < 1e-10 * grad.max_abs());
    CHECK_THROWS_AS(liouville_onesided(ScalarField::zeros(GridSpec{2, 1.0, 8, true}), s, Sign::Plus), DomainError);
}

TEST_CASE("atomic measures") {
    AtomicMeasure mu{2, {{{0.0, 0.0, 0.0}, 1.0}, {{0.5, 0.0, 0.0}, 2.0}}};
    CHECK_NOTHROW(mu.validate());
    CHECK(mu.total_mass() == 3.0);
    CHECK(mu.ball_mass({0.0, 0.0, 0.0}, 0.5) == 1.0);
    CHECK(mu.ball_mass({0.0, 0.0, 0.0}, 0.5000001) == 3.0);
    CHECK(potential_of_measure(mu, 1.0, {0.0, 0.0, 0.0}) == std::numeric_limits<double>::infinity());
    const double v = potential_of_measure(mu, 1.0, {0.0, 1.0, 0.0});
    CHECK(v == Approx(riesz_normalizer(2, 1.0) * (1.0 + 2.0 / std::sqrt(1.25))).epsilon(1e-14));
    CHECK(measure_strength(mu, 1.0) > 0.0);
    AtomicMeasure bad{1, {{{0.0, 0.0, 0.0}, -1.0}}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
