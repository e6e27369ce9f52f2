#include "fracgrad/field.hpp"
#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracgrad {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

double norm_of(const Point& x, int n) {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += x[d] * x[d];
    return std::sqrt(r2);
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* who) {
    if (!(a.grid() == b.grid())) throw StructuralError(std::string(who) + ": fields live on different grids");
}

}  // namespace

// ---------------------------------------------------------------------------
// GridSpec
// ---------------------------------------------------------------------------

void GridSpec::validate() const {
    if (n < 1 || n > 3) throw StructuralError("GridSpec: dimension must be 1, 2 or 3");
    if (!(extent > 0.0) || !std::isfinite(extent)) throw StructuralError("GridSpec: extent must be positive");
    if (points < 8 || !is_power_of_two(points))
        throw StructuralError("GridSpec: points per axis must be a power of two >= 8");
}

double GridSpec::cell_volume() const { return std::pow(spacing(), n); }

std::size_t GridSpec::size() const {
    std::size_t total = 1;
    for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(points);
    return total;
}

double GridSpec::coordinate(int i) const { return (i + (offset ? 0.5 : 0.0)) * spacing() - 0.5 * extent; }

Index GridSpec::unflatten(std::size_t flat) const {
    Index idx{0, 0, 0};
    for (int d = n - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(flat % points);
        flat /= points;
    }
    return idx;
}

std::size_t GridSpec::flatten(const Index& idx) const {
    std::size_t flat = 0;
    for (int d = 0; d < n; ++d) flat = flat * points + static_cast<std::size_t>(idx[d]);
    return flat;
}

Point GridSpec::point(std::size_t flat) const {
    const Index idx = unflatten(flat);
    Point x{0.0, 0.0, 0.0};
    for (int d = 0; d < n; ++d) x[d] = coordinate(idx[d]);
    return x;
}

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

ScalarField::ScalarField(GridSpec grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw StructuralError("ScalarField: expected " + std::to_string(grid_.size()) + " values, got " +
                              std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw DomainError("ScalarField: non-finite sample");
}

ScalarField ScalarField::zeros(const GridSpec& grid) {
    grid.validate();
    return ScalarField(grid, std::vector<double>(grid.size(), 0.0));
}

double ScalarField::mean() const { return pairwise_sum(values_) / static_cast<double>(values_.size()); }

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

ScalarField operator*(double c, const ScalarField& u) {
    std::vector<double> out(u.values().begin(), u.values().end());
    for (double& v : out) v *= c;
    return ScalarField(u.grid(), std::move(out));
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "operator+");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return ScalarField(a.grid(), std::move(out));
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a, b, "operator-");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return ScalarField(a.grid(), std::move(out));
}

VectorField::VectorField(std::vector<ScalarField> components) : components_(std::move(components)) {
    if (components_.empty()) throw StructuralError("VectorField: needs at least one component");
    for (const auto& c : components_) require_same_grid(c, components_.front(), "VectorField");
}

ScalarField VectorField::magnitude() const {
    std::vector<double> out(components_.front().size(), 0.0);
    for (const auto& c : components_)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i] * c[i];
    for (double& v : out) v = std::sqrt(v);
    return ScalarField(grid(), std::move(out));
}

void BallDomain::validate(const GridSpec& grid) const {
    if (!(radius > 0.0)) throw DomainError("BallDomain: radius must be positive");
    const double half = 0.5 * grid.extent;
    for (int d = 0; d < grid.n; ++d)
        if (center[d] - radius < -half || center[d] + radius > half)
            throw DomainError("BallDomain: ball does not fit inside the box");
}

bool BallDomain::contains(const Point& x, int n) const {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += (x[d] - center[d]) * (x[d] - center[d]);
    return r2 < radius * radius;
}

double BallDomain::volume(int n) const { return ball_volume(n, radius); }

// ---------------------------------------------------------------------------
// Functionals
// ---------------------------------------------------------------------------

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 64) {
        double s = 0.0;
        for (double v : xs) s += v;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

ScalarField sample(const GridSpec& grid, const std::function<double(const Point&)>& fn) {
    grid.validate();
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = fn(grid.point(i));
        if (!std::isfinite(values[i])) throw DomainError("sample: function is not finite at a sample point");
    }
    return ScalarField(grid, std::move(values));
}

ScalarField shifted(const ScalarField& u, const Index& cells) {
    const GridSpec& g = u.grid();
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Index idx = g.unflatten(i);
        for (int d = 0; d < g.n; ++d) idx[d] = ((idx[d] - cells[d]) % g.points + g.points) % g.points;
        out[i] = u[g.flatten(idx)];
    }
    return ScalarField(g, std::move(out));
}

namespace {

double lp_of_magnitudes(std::vector<double> mags, double p, double cell) {
    if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
    for (double& v : mags) v = std::pow(v, p);
    return std::pow(pairwise_sum(mags) * cell, 1.0 / p);
}

}  // namespace

double lp_norm(const ScalarField& u, double p) {
    std::vector<double> mags(u.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::fabs(u[i]);
    return lp_of_magnitudes(std::move(mags), p, u.grid().cell_volume());
}

double lp_norm(const VectorField& u, double p) {
    const ScalarField m = u.magnitude();
    return lp_of_magnitudes(std::vector<double>(m.values().begin(), m.values().end()), p, m.grid().cell_volume());
}

namespace {

double weighted_hardy_norm(const ScalarField& u, double s, double p) {
    const GridSpec& g = u.grid();
    if (!g.offset) throw PreconditionError("hardy_quotient: grid must be offset so no sample sits at the origin");
    if (!(p >= 1.0)) throw DomainError("hardy_quotient: p must be >= 1");
    std::vector<double> terms(u.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = std::pow(std::pow(norm_of(g.point(i), g.n), -s) * std::fabs(u[i]), p);
    return std::pow(pairwise_sum(terms) * g.cell_volume(), 1.0 / p);
}

double hardy_ratio(double num, double den) {
    if (!(den > 0.0)) throw UndefinedQuotientError("hardy_quotient: derivative norm vanishes");
    return num / den;
}

}  // namespace

double hardy_quotient(const ScalarField& u, const ScalarField& du, double s, double p) {
    require_same_grid(u, du, "hardy_quotient");
    return hardy_ratio(weighted_hardy_norm(u, s, p), lp_norm(du, p));
}

double hardy_quotient(const ScalarField& u, const VectorField& du, double s, double p) {
    if (!(u.grid() == du.grid())) throw StructuralError("hardy_quotient: fields live on different grids");
    return hardy_ratio(weighted_hardy_norm(u, s, p), lp_norm(du, p));
}

double moser_functional(const ScalarField& g, const BallDomain& omega, double denom, double kappa, double s) {
    const GridSpec& grid = g.grid();
    if (!(denom > 0.0)) throw DomainError("moser_functional: denominator must be positive");
    if (!(kappa >= 0.0)) throw DomainError("moser_functional: kappa must be non-negative");
    if (!(s > 0.0 && s < grid.n)) throw DomainError("moser_functional: s must lie in (0, n)");
    omega.validate(grid);
    const double expo = grid.n / (grid.n - s);
    std::vector<double> terms;
    terms.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!omega.contains(grid.point(i), grid.n)) continue;
        terms.push_back(std::exp(std::pow(kappa * std::fabs(g[i]) / denom, expo)));
    }
    if (terms.empty()) throw DomainError("moser_functional: no sample lies inside the ball");
    return pairwise_sum(terms) / static_cast<double>(terms.size());
}

double gagliardo_seminorm(const ScalarField& u, double s) {
    const GridSpec& g = u.grid();
    if (g.n > 2) throw DomainError("gagliardo_seminorm: only n = 1 or 2 supported");
    if (g.points > 256) throw ResourceError("gagliardo_seminorm: O(N^{2n}) budget exceeded (N > 256)");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("gagliardo_seminorm: s must lie in (0,1)");

    const double h = g.spacing();
    const int N = g.points;
    // Kernel indexed by the integer offset (|k|^{-n-s}, k != 0); the pair sum is symmetric so
    // each unordered pair contributes twice.
    const int span = 2 * N - 1;
    std::vector<double> kernel(g.n == 1 ? span : std::size_t(span) * span, 0.0);
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        const int kx = int(t % span) - (N - 1);
        const int ky = g.n == 1 ? 0 : int(t / span) - (N - 1);
        const double r2 = double(kx) * kx + double(ky) * ky;
        if (r2 > 0.0) kernel[t] = std::pow(r2, -0.5 * (g.n + s));
    }
    std::vector<double> rows(u.size(), 0.0);
    for (std::size_t a = 0; a < u.size(); ++a) {
        const Index ia = g.unflatten(a);
        double acc = 0.0;
        for (std::size_t b = a + 1; b < u.size(); ++b) {
            const Index ib = g.unflatten(b);
            std::size_t t;
            if (g.n == 1) {
                t = std::size_t(ib[0] - ia[0] + N - 1);
            } else {
                t = std::size_t(ib[1] - ia[1] + N - 1) + std::size_t(ib[0] - ia[0] + N - 1) * span;
            }
            acc += std::fabs(u[a] - u[b]) * kernel[t];
        }
        rows[a] = 2.0 * acc;
    }
    // |x - y|^{-n-s} = h^{-n-s} |k|^{-n-s}; two cell volumes.
    return pairwise_sum(rows) * std::pow(h, -(g.n + s)) * g.cell_volume() * g.cell_volume();
}

double morrey_norm(const ScalarField& f, double p, double kappa) {
    const GridSpec& g = f.grid();
    if (!(p >= 1.0)) throw DomainError("morrey_norm: p must be >= 1");
    if (!(kappa > 0.0 && kappa <= g.n)) throw DomainError("morrey_norm: kappa must lie in (0, n]");

    const double h = g.spacing();
    const double cover = g.extent * std::sqrt(double(g.n));
    std::vector<double> radii;
    for (double r = 2.0 * h;; r *= 2.0) {
        radii.push_back(r);
        if (r >= cover) break;
    }
    std::vector<double> powered(f.size());
    for (std::size_t i = 0; i < powered.size(); ++i) powered[i] = std::pow(std::fabs(f[i]), p);
    const double total = pairwise_sum(powered);

    double best = 0.0;
    const int N = g.points;
    Index c{0, 0, 0};
    const int cy_end = g.n > 1 ? N : 1, cz_end = g.n > 2 ? N : 1;
    for (c[0] = 0; c[0] < N; c[0] += 4)
        for (c[1] = 0; c[1] < cy_end; c[1] += 4)
            for (c[2] = 0; c[2] < cz_end; c[2] += 4) {
                for (double r : radii) {
                    double mass;
                    if (r >= cover) {
                        mass = total;
                    } else {
                        const int reach = int(std::ceil(r / h));
                        Index lo{0, 0, 0}, hi{0, 0, 0};
                        for (int d = 0; d < g.n; ++d) {
                            lo[d] = std::max(0, c[d] - reach);
                            hi[d] = std::min(N - 1, c[d] + reach);
                        }
                        std::vector<double> inside;
                        Index k{0, 0, 0};
                        for (k[0] = lo[0]; k[0] <= hi[0]; ++k[0])
                            for (k[1] = lo[1]; k[1] <= hi[1]; ++k[1])
                                for (k[2] = lo[2]; k[2] <= hi[2]; ++k[2]) {
                                    double r2 = 0.0;
                                    for (int d = 0; d < g.n; ++d) {
                                        const double dx = (k[d] - c[d]) * h;
                                        r2 += dx * dx;
                                    }
                                    if (r2 < r * r) inside.push_back(powered[g.flatten(k)]);
                                }
                        mass = pairwise_sum(inside);
                    }
                    best = std::max(best, std::pow(r, kappa - g.n) * mass * g.cell_volume());
                }
            }
    return std::pow(best, 1.0 / p);
}

double singular_quadrature_correction(const GridSpec& grid, const Point& center, double exponent) {
    grid.validate();
    if (!(exponent > -grid.n)) throw DomainError("singular_quadrature_correction: exponent must exceed -n");
    if (exponent >= 0.0 && exponent == 2.0 * std::floor(0.5 * exponent)) return 0.0;  // polynomial integrand
    const double h = grid.spacing();
    const double o = grid.offset ? 0.5 : 0.0;
    std::array<double, 3> shift{0.0, 0.0, 0.0};
    for (int d = 0; d < grid.n; ++d) {
        const double t = o - (center[d] + 0.5 * grid.extent) / h;
        shift[d] = t - std::round(t);
    }
    return std::pow(h, grid.n + exponent) * lattice_zeta(grid.n, -exponent, shift);
}

}  // namespace fracgrad
