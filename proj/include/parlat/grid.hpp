// Sampled functions on uniform grids and their norms: plain p-norms,
// projective (sum-of-norms) and inductive (best-splitting) norms, amalgam
// norms over unit cells, and the discrete convolution used by the
// convolution inequality checks.
//
// All quadrature is midpoint-rectangle: a function on [0,1] at resolution r
// is sampled at (i + 1/2)/r, a function on the window [-T, T] at
// -T + (i + 1/2)/r. Midpoints keep endpoint singularities off the grid.
#pragma once

#include "parlat/exponent.hpp"
#include "parlat/rng.hpp"

#include <complex>
#include <vector>

namespace parlat {

enum class Domain { UnitInterval, RealWindow };

struct GridFunction {
    Domain domain = Domain::UnitInterval;
    int halfwidth = 0;   // T, RealWindow only
    int resolution = 2;  // samples per unit length
    std::vector<std::complex<double>> values;

    static GridFunction unit_interval(int resolution);
    static GridFunction real_window(int halfwidth, int resolution);

    double cell_width() const { return 1.0 / resolution; }
    double x_at(std::size_t i) const {
        const double offset = domain == Domain::RealWindow ? -halfwidth : 0.0;
        return offset + (static_cast<double>(i) + 0.5) / resolution;
    }
    bool same_grid(const GridFunction& other) const {
        return domain == other.domain && halfwidth == other.halfwidth &&
               resolution == other.resolution;
    }
};

// f(x) = x^(-alpha) * (1 - log x)^(-beta) on (0,1]; the standard family
// whose L^p membership interval [1, sup) vs [1, sup] is known in closed
// form: f in L^p iff alpha*p < 1, or alpha*p = 1 and beta*p > 1.
struct PowerLogFamily {
    Rational alpha{0};
    Rational beta{0};

    PowerLogFamily(Rational a, Rational b);
    double eval(double x) const;
    GridFunction sample(int resolution) const;
};

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);

// Linear discrete convolution scaled by the cell width. The result lives on
// its own uniform grid of 2N-1 samples; norms treat it with the same
// quadrature weight.
std::vector<std::complex<double>> convolution(const GridFunction& f,
                                              const GridFunction& g);

double lp_norm(const GridFunction& f, const Exponent& e);
double lp_norm(const std::vector<std::complex<double>>& values, double cell_width,
               const Exponent& e);

// ||f||_{p ^ q} = ||f||_p + ||f||_q
double projective_norm(const GridFunction& f, const Exponent& e1, const Exponent& e2);

struct InductiveNormResult {
    double value = 0.0;        // certified upper bound, <= stage1_value
    double stage1_value = 0.0; // best hard-threshold split
    bool converged = true;
    double operator+(double rhs) const { return value + rhs; }
};

// ||f||_{p v q} = inf over f = g + h of ||g||_p + ||h||_q, approximated by
// (1) golden-section over the hard-threshold family g = f * 1{|f| > t} and
// (2) descent from that start: exact 1-D clamp search when one exponent is
// infinite, projected gradient on the split magnitudes otherwise. The
// returned value is the cost of a feasible split, hence >= the true inf.
InductiveNormResult inductive_norm(const GridFunction& f, const Exponent& e1,
                                   const Exponent& e2, double tol = 1e-4);

// l^q combination over unit cells (n, n+1) of local L^p norms.
double amalgam_norm(const GridFunction& f, const Exponent& local, const Exponent& global);

// Dense uniform scan of the hard-threshold split family; the independent
// oracle the inductive-norm bracket is checked against.
double threshold_family_value(const GridFunction& f, const Exponent& e1,
                              const Exponent& e2, int grid_points);

// Random sample generators (deterministic in the Rng stream).
GridFunction random_smooth(Rng& rng, int resolution);  // on [0,1], complex trig mix
// Bump mixture supported exactly in |x| <= halfwidth/2.
GridFunction random_central_bump(Rng& rng, int halfwidth, int resolution);
// Spiky nonnegative mixture on [0,1] with amplitudes across decades.
GridFunction random_spiky(Rng& rng, int resolution);
GridFunction indicator(double a, double b, int halfwidth, int resolution);

}  // namespace parlat
