#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/fracops.hpp"
#include "parallel.hpp"

#include <cmath>
#include <string>

namespace fracgrad {

namespace {

void require_s(double s, const char* who) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(who) + ": s must lie in (0,1)");
}

struct Support {
    std::vector<Index> index;
    std::vector<double> value;
};

Support support_of(const ScalarField& u) {
    Support sup;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0) continue;
        sup.index.push_back(u.grid().unflatten(i));
        sup.value.push_back(u[i]);
    }
    return sup;
}

// Table of a radial function of the integer offset k, |k_d| < N, k != 0.
class OffsetTable {
public:
    template <typename F>
    OffsetTable(int n, int N, F&& fn) : n_(n), N_(N), span_(2 * N - 1) {
        std::size_t total = 1;
        for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(span_);
        table_.assign(total, 0.0);
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t rest = t;
            double r2 = 0.0;
            for (int d = 0; d < n; ++d) {
                const int k = int(rest % span_) - (N - 1);
                rest /= span_;
                r2 += double(k) * k;
            }
            if (r2 > 0.0) table_[t] = fn(r2);
        }
    }

    double operator()(const Index& a, const Index& b) const {
        std::size_t t = 0, stride = 1;
        for (int d = 0; d < n_; ++d) {
            t += static_cast<std::size_t>(b[d] - a[d] + N_ - 1) * stride;
            stride *= static_cast<std::size_t>(span_);
        }
        return table_[t];
    }

private:
    int n_, N_, span_;
    std::vector<double> table_;
};

// Zero-extended sample lookup.
double at(const ScalarField& u, Index idx) {
    const GridSpec& g = u.grid();
    for (int d = 0; d < g.n; ++d)
        if (idx[d] < 0 || idx[d] >= g.points) return 0.0;
    return u[g.flatten(idx)];
}

double central_laplacian(const ScalarField& u, const Index& i) {
    const double h = u.grid().spacing();
    double acc = 0.0;
    for (int d = 0; d < u.grid().n; ++d) {
        Index lo = i, hi = i;
        --lo[d];
        ++hi[d];
        acc += at(u, hi) - 2.0 * at(u, i) + at(u, lo);
    }
    return acc / (h * h);
}

double central_derivative(const ScalarField& u, const Index& i, int d) {
    Index lo = i, hi = i;
    --lo[d];
    ++hi[d];
    return (at(u, hi) - at(u, lo)) / (2.0 * u.grid().spacing());
}

}  // namespace

DirectResult frac_laplacian_direct(const ScalarField& u, double s) {
    require_s(s, "frac_laplacian_direct");
    const GridSpec& g = u.grid();
    const int n = g.n;
    const double h = g.spacing();
    const double c_plus = kernel_constants(n, s).c_ns_plus;
    const double z_full = lattice_zeta(n, n + s);
    const double z_curv = lattice_zeta(n, n + s - 2.0);
    const OffsetTable kernel(n, g.points, [&](double r2) { return std::pow(r2, -0.5 * (n + s)); });
    const Support sup = support_of(u);

    std::vector<double> out(u.size());
    detail::parallel_for(u.size(), [&](std::size_t i) {
        const Index x = g.unflatten(i);
        double sum = 0.0;
        for (std::size_t k = 0; k < sup.value.size(); ++k) sum += sup.value[k] * kernel(x, sup.index[k]);
        const double curvature = 0.5 * central_laplacian(u, x) * h * h / n * z_curv;
        out[i] = c_plus * std::pow(h, -s) * (u[i] * z_full - sum + curvature);
    });
    const double tail = c_plus * u.max_abs() * sphere_area(n) * std::pow(0.5 * g.extent, -s) / s;
    return {ScalarField(g, std::move(out)), tail};
}

DirectVectorResult frac_gradient_direct(const ScalarField& u, double s) {
    require_s(s, "frac_gradient_direct");
    const GridSpec& g = u.grid();
    const int n = g.n;
    const double h = g.spacing();
    const double c_minus = kernel_constants(n, s).c_ns_minus;
    const double z_slope = lattice_zeta(n, n + s - 1.0);
    const OffsetTable kernel(n, g.points, [&](double r2) { return std::pow(r2, -0.5 * (n + 1 + s)); });
    const Support sup = support_of(u);

    std::vector<std::vector<double>> out(n, std::vector<double>(u.size()));
    detail::parallel_for(u.size(), [&](std::size_t i) {
        const Index x = g.unflatten(i);
        double sums[3] = {0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < sup.value.size(); ++k) {
            const double w = sup.value[k] * kernel(x, sup.index[k]);
            for (int d = 0; d < n; ++d) sums[d] += (sup.index[k][d] - x[d]) * w;
        }
        for (int d = 0; d < n; ++d) {
            const double slope = central_derivative(u, x, d) * h / n * z_slope;
            out[d][i] = -c_minus * std::pow(h, -s) * (sums[d] - slope);
        }
    });
    std::vector<ScalarField> comps;
    for (auto& c : out) comps.emplace_back(g, std::move(c));
    return {VectorField(std::move(comps)), 0.0};
}

std::vector<double> riesz_potential_direct_at(const ScalarField& f, double alpha,
                                              const std::vector<std::size_t>& samples) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("riesz_potential_direct: alpha must lie in (0, n)");
    const double h = g.spacing();
    const double cell = g.cell_volume();
    const double omega = sphere_area(n);
    const double r_cell = std::pow(n * cell / omega, 1.0 / n);
    const double self = omega * std::pow(r_cell, alpha) / alpha;
    const double scale = std::pow(h, alpha - n) * cell;
    const OffsetTable kernel(n, g.points, [&](double r2) { return std::pow(r2, 0.5 * (alpha - n)); });
    const Support sup = support_of(f);

    std::vector<double> out(samples.size());
    detail::parallel_for(samples.size(), [&](std::size_t i) {
        if (samples[i] >= f.size()) throw StructuralError("riesz_potential_direct_at: sample index out of range");
        const Index x = g.unflatten(samples[i]);
        double sum = 0.0;
        for (std::size_t k = 0; k < sup.value.size(); ++k) sum += sup.value[k] * kernel(x, sup.index[k]);
        out[i] = sum * scale + f[samples[i]] * self;
    });
    return out;
}

ScalarField riesz_potential_direct(const ScalarField& f, double alpha) {
    std::vector<std::size_t> all(f.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return ScalarField(f.grid(), riesz_potential_direct_at(f, alpha, all));
}

double riesz_potential_at(const ScalarField& f, double alpha, const Point& x) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("riesz_potential_at: alpha must lie in (0, n)");
    std::vector<double> terms;
    terms.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0.0) continue;
        const Point y = g.point(i);
        double r2 = 0.0;
        for (int d = 0; d < n; ++d) r2 += (y[d] - x[d]) * (y[d] - x[d]);
        if (r2 == 0.0) continue;
        terms.push_back(f[i] * std::pow(r2, 0.5 * (alpha - n)));
    }
    return pairwise_sum(terms) * g.cell_volume();
}

ScalarField liouville_onesided(const ScalarField& u, double s, Sign sign) {
    const GridSpec& g = u.grid();
    if (g.n != 1) throw DomainError("liouville_onesided: requires n = 1");
    require_s(s, "liouville_onesided");
    const int N = g.points;
    const double h = g.spacing();
    const double pre = s / gamma(1.0 - s) * std::pow(h, -s);
    const double zeta_full = riemann_zeta(1.0 + s);
    const double zeta_slope = riemann_zeta(s);
    const double zeta_curv = riemann_zeta(s - 1.0);
    const int dir = sign == Sign::Plus ? 1 : -1;
    std::vector<double> weights(N);
    for (int k = 1; k < N; ++k) weights[k] = std::pow(double(k), -1.0 - s);

    std::vector<double> out(N);
    for (int i = 0; i < N; ++i) {
        double sum = 0.0;
        for (int k = 1; k < N; ++k) {
            const int j = i + dir * k;
            if (j < 0 || j >= N) break;
            sum += u[j] * weights[k];
        }
        const Index x{i, 0, 0};
        const double du = central_derivative(u, x, 0) * h;
        const double d2u = central_laplacian(u, x) * h * h;
        // integral of (u(x) - u(x + dir t)) t^{-1-s} from the lattice sum plus its local corrections
        out[i] = pre * (u[i] * zeta_full - sum + dir * zeta_slope * du + 0.5 * zeta_curv * d2u);
    }
    return ScalarField(g, std::move(out));
}

}  // namespace fracgrad
