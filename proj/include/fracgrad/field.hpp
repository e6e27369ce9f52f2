#pragma once

// Sampled fields on a uniform periodic box [-L/2, L/2)^n and the integral
// functionals evaluated on them.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracgrad {

using Point = std::array<double, 3>;
using Index = std::array<int, 3>;

/// Uniform sampling of the cube [-L/2, L/2)^n with N points per axis.
/// With `offset` set the samples sit at cell centres, (i + 1/2) h - L/2, so none hits the origin.
struct GridSpec {
    int n = 1;
    double extent = 1.0;  ///< L
    int points = 64;      ///< N, a power of two >= 8
    bool offset = true;

    void validate() const;
    double spacing() const { return extent / points; }
    double cell_volume() const;
    std::size_t size() const;
    double coordinate(int i) const;
    Index unflatten(std::size_t flat) const;
    std::size_t flatten(const Index& idx) const;
    Point point(std::size_t flat) const;

    bool operator==(const GridSpec&) const = default;
};

/// Immutable real samples on a grid.
class ScalarField {
public:
    /// Throws StructuralError on a size mismatch and DomainError on non-finite values.
    ScalarField(GridSpec grid, std::vector<double> values);
    static ScalarField zeros(const GridSpec& grid);

    const GridSpec& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double mean() const;
    double max_abs() const;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

ScalarField operator*(double c, const ScalarField& u);
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);

/// n scalar components sharing one grid.
class VectorField {
public:
    explicit VectorField(std::vector<ScalarField> components);

    const GridSpec& grid() const { return components_.front().grid(); }
    std::size_t dim() const { return components_.size(); }
    const ScalarField& operator[](std::size_t j) const { return components_[j]; }
    const std::vector<ScalarField>& components() const { return components_; }

    /// Pointwise Euclidean magnitude.
    ScalarField magnitude() const;

private:
    std::vector<ScalarField> components_;
};

/// Ball B(center, radius) that must lie inside the sampling box.
struct BallDomain {
    Point center{0.0, 0.0, 0.0};
    double radius = 0.25;

    void validate(const GridSpec& grid) const;
    bool contains(const Point& x, int n) const;
    double volume(int n) const;
};

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> xs);

/// values[i] = fn(x_i). Throws DomainError if fn returns a non-finite value.
ScalarField sample(const GridSpec& grid, const std::function<double(const Point&)>& fn);

/// Periodic shift by whole cells: result(x) = u(x - shift h).
ScalarField shifted(const ScalarField& u, const Index& cells);

/// Riemann-sum L^p norm; vector fields use the pointwise Euclidean magnitude.
double lp_norm(const ScalarField& u, double p);
double lp_norm(const VectorField& u, double p);

/// (sum (|x|^-s |u|)^p h^n)^{1/p} / ||du||_p. Requires an offset grid.
double hardy_quotient(const ScalarField& u, const ScalarField& du, double s, double p);
double hardy_quotient(const ScalarField& u, const VectorField& du, double s, double p);

/// Mean over the ball of exp((kappa |g| / denom)^{n/(n-s)}): the sum over samples inside the ball
/// times h^n, divided by the sampled ball volume (count h^n), so g = 0 gives exactly 1.
double moser_functional(const ScalarField& g, const BallDomain& omega, double denom, double kappa, double s);

/// Double Riemann sum of |u(x)-u(y)| / |x-y|^{n+s} over distinct sample pairs.
/// Only n in {1,2} and N <= 256; larger grids throw ResourceError.
double gagliardo_seminorm(const ScalarField& u, double s);

/// Lattice lower approximation of the Morrey norm L^{p,kappa}: centres on every 4th sample,
/// dyadic radii 2h, 4h, ... up to the first radius that covers the whole box.
double morrey_norm(const ScalarField& f, double p, double kappa);

/// Leading error of the Riemann sum of |x - c|^exponent over the samples (the sample at c,
/// if any, omitted): sum h^n |x_i - c|^e  ~  integral + correction.
/// Subtracting g(c) * correction from the sum of |x_i - c|^e g(x_i) h^n removes the
/// O(h^{n+e}) singular error. Requires -n < exponent.
double singular_quadrature_correction(const GridSpec& grid, const Point& center, double exponent);

}  // namespace fracgrad
