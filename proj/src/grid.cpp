#include "parlat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlat {

GridFunction GridFunction::unit_interval(int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    GridFunction f;
    f.domain = Domain::UnitInterval;
    f.resolution = resolution;
    f.values.assign(resolution, {0.0, 0.0});
    return f;
}

GridFunction GridFunction::real_window(int halfwidth, int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    if (halfwidth < 1) throw std::invalid_argument("halfwidth must be >= 1");
    GridFunction f;
    f.domain = Domain::RealWindow;
    f.halfwidth = halfwidth;
    f.resolution = resolution;
    f.values.assign(static_cast<std::size_t>(2) * halfwidth * resolution, {0.0, 0.0});
    return f;
}

PowerLogFamily::PowerLogFamily(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha < Rational(0) || beta < Rational(0))
        throw std::invalid_argument("power-log family needs alpha, beta >= 0");
}

double PowerLogFamily::eval(double x) const {
    return std::pow(x, -to_double(alpha)) * std::pow(1.0 - std::log(x), -to_double(beta));
}

GridFunction PowerLogFamily::sample(int resolution) const {
    GridFunction f = GridFunction::unit_interval(resolution);
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = eval(f.x_at(i));
    return f;
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("pointwise_product: grids do not match");
    GridFunction out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= g.values[i];
    return out;
}

std::vector<std::complex<double>> convolution(const GridFunction& f,
                                              const GridFunction& g) {
    if (!f.same_grid(g)) throw std::invalid_argument("convolution: grids do not match");
    const auto nonzero_range = [](const GridFunction& u) {
        std::size_t lo = 0, hi = u.values.size();
        while (lo < hi && std::abs(u.values[lo]) == 0.0) ++lo;
        while (hi > lo && std::abs(u.values[hi - 1]) == 0.0) --hi;
        return std::pair<std::size_t, std::size_t>{lo, hi};
    };
    const auto [flo, fhi] = nonzero_range(f);
    const auto [glo, ghi] = nonzero_range(g);
    std::vector<std::complex<double>> out(f.values.size() + g.values.size() - 1,
                                          {0.0, 0.0});
    const double h = f.cell_width();
    for (std::size_t i = flo; i < fhi; ++i) {
        if (std::abs(f.values[i]) == 0.0) continue;
        const std::complex<double> fi = h * f.values[i];
        for (std::size_t j = glo; j < ghi; ++j) out[i + j] += fi * g.values[j];
    }
    return out;
}

double lp_norm(const std::vector<std::complex<double>>& values, double cell_width,
               const Exponent& e) {
    if (e.is_infinite()) {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }
    const double p = e.p_double();
    double sum = 0.0;
    for (const auto& v : values) sum += std::pow(std::abs(v), p);
    return std::pow(cell_width * sum, 1.0 / p);
}

double lp_norm(const GridFunction& f, const Exponent& e) {
    return lp_norm(f.values, f.cell_width(), e);
}

double projective_norm(const GridFunction& f, const Exponent& e1, const Exponent& e2) {
    return lp_norm(f, e1) + lp_norm(f, e2);
}

namespace {

double norm_of_magnitudes(const std::vector<double>& mag, double h, const Exponent& e) {
    if (e.is_infinite()) {
        double m = 0.0;
        for (double v : mag) m = std::max(m, v);
        return m;
    }
    const double p = e.p_double();
    double sum = 0.0;
    for (double v : mag) sum += std::pow(v, p);
    return std::pow(h * sum, 1.0 / p);
}

// Cost of the split g = (parts of f above the threshold), h = rest.
double threshold_cost(const std::vector<double>& mag, double h, double t,
                      const Exponent& e1, const Exponent& e2) {
    std::vector<double> tall(mag.size()), rest(mag.size());
    for (std::size_t i = 0; i < mag.size(); ++i) {
        if (mag[i] > t) {
            tall[i] = mag[i];
        } else {
            rest[i] = mag[i];
        }
    }
    return norm_of_magnitudes(tall, h, e1) + norm_of_magnitudes(rest, h, e2);
}

// Cost of the clamp split: the e_inf side takes min(|f|, c), the finite side
// the excess. Convex in c.
double clamp_cost(const std::vector<double>& mag, double h, double c,
                  const Exponent& finite_side) {
    std::vector<double> excess(mag.size());
    double cap = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        excess[i] = std::max(mag[i] - c, 0.0);
        cap = std::max(cap, std::min(mag[i], c));
    }
    return norm_of_magnitudes(excess, h, finite_side) + cap;
}

template <typename F>
double golden_section(F cost, double lo, double hi, double tol, double& best_arg) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = cost(x1), f2 = cost(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = cost(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = cost(x2);
        }
    }
    best_arg = 0.5 * (a + b);
    return std::min({f1, f2, cost(best_arg)});
}

}  // namespace

InductiveNormResult inductive_norm(const GridFunction& f, const Exponent& e1,
                                   const Exponent& e2, double tol) {
    if (e1 == e2)
        throw std::invalid_argument("inductive_norm: exponents must differ");
    const double h = f.cell_width();
    std::vector<double> mag(f.values.size());
    double top = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        mag[i] = std::abs(f.values[i]);
        top = std::max(top, mag[i]);
    }
    InductiveNormResult result;
    if (top == 0.0) return result;

    // Stage 1: hard-threshold family, coarse grid plus golden-section refine.
    const int coarse = 96;
    double best_t = top, best_cost = threshold_cost(mag, h, top, e1, e2);
    for (int k = 0; k <= coarse; ++k) {
        const double t = top * k / coarse;
        const double c = threshold_cost(mag, h, t, e1, e2);
        if (c < best_cost) {
            best_cost = c;
            best_t = t;
        }
    }
    const double step = top / coarse;
    double refined_t = best_t;
    const double refined = golden_section(
        [&](double t) { return threshold_cost(mag, h, t, e1, e2); },
        std::max(0.0, best_t - step), std::min(top, best_t + step), top * 1e-10,
        refined_t);
    result.stage1_value = std::min(best_cost, refined);
    result.value = result.stage1_value;

    // Stage 2: descent below the threshold family.
    if (e1.is_infinite() || e2.is_infinite()) {
        // Optimal complement against an inf-side is a clamp; 1-D convex search.
        const Exponent& finite_side = e1.is_infinite() ? e2 : e1;
        double c_arg = 0.0;
        const double clamp_best = golden_section(
            [&](double c) { return clamp_cost(mag, h, c, finite_side); }, 0.0, top,
            top * 1e-12, c_arg);
        result.value = std::min(result.value, clamp_best);
        return result;
    }

    // Projected gradient on the split magnitudes s in [0, |f|]; phases stay
    // aligned with f, which never hurts either norm.
    const double p = e1.p_double(), q = e2.p_double();
    std::vector<double> s(mag.size());
    for (std::size_t i = 0; i < mag.size(); ++i)
        s[i] = mag[i] > best_t ? mag[i] * (1.0 - 1e-6) : mag[i] * 1e-6;
    auto cost_of = [&](const std::vector<double>& sv) {
        double sp = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < sv.size(); ++i) {
            sp += std::pow(sv[i], p);
            sq += std::pow(mag[i] - sv[i], q);
        }
        return std::pow(h * sp, 1.0 / p) + std::pow(h * sq, 1.0 / q);
    };
    double cur = cost_of(s);
    std::vector<double> grad(mag.size()), trial(mag.size());
    const int max_iter = 2000;
    bool stalled = false;
    int iter = 0;
    for (; iter < max_iter && !stalled; ++iter) {
        double np = 0.0, nq = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            np += std::pow(s[i], p);
            nq += std::pow(mag[i] - s[i], q);
        }
        np = std::pow(h * np, 1.0 / p);
        nq = std::pow(h * nq, 1.0 / q);
        if (np == 0.0 || nq == 0.0) break;
        for (std::size_t i = 0; i < s.size(); ++i)
            grad[i] = h * std::pow(s[i], p - 1.0) * std::pow(np, 1.0 - p) -
                      h * std::pow(mag[i] - s[i], q - 1.0) * std::pow(nq, 1.0 - q);
        double alpha = top;
        bool improved = false;
        for (int bt = 0; bt < 40; ++bt, alpha *= 0.5) {
            for (std::size_t i = 0; i < s.size(); ++i)
                trial[i] = std::clamp(s[i] - alpha * grad[i], 0.0, mag[i]);
            const double c = cost_of(trial);
            if (c < cur) {
                stalled = cur - c < tol * 0.01 * cur;
                s = trial;
                cur = c;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    result.converged = iter < max_iter;
    result.value = std::min(result.value, cur);
    return result;
}

double threshold_family_value(const GridFunction& f, const Exponent& e1,
                              const Exponent& e2, int grid_points) {
    const double h = f.cell_width();
    std::vector<double> mag(f.values.size());
    double top = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        mag[i] = std::abs(f.values[i]);
        top = std::max(top, mag[i]);
    }
    if (top == 0.0) return 0.0;
    double best = threshold_cost(mag, h, top, e1, e2);
    for (int k = 0; k <= grid_points; ++k)
        best = std::min(best, threshold_cost(mag, h, top * k / grid_points, e1, e2));
    return best;
}

double amalgam_norm(const GridFunction& f, const Exponent& local,
                    const Exponent& global) {
    if (f.domain != Domain::RealWindow)
        throw std::invalid_argument("amalgam_norm: needs a RealWindow function");
    const int cells = 2 * f.halfwidth;
    const int per_cell = f.resolution;
    const double h = f.cell_width();
    std::vector<double> cell_norms(cells, 0.0);
    for (int c = 0; c < cells; ++c) {
        if (local.is_infinite()) {
            double m = 0.0;
            for (int i = 0; i < per_cell; ++i)
                m = std::max(m, std::abs(f.values[static_cast<std::size_t>(c) * per_cell + i]));
            cell_norms[c] = m;
        } else {
            const double p = local.p_double();
            double sum = 0.0;
            for (int i = 0; i < per_cell; ++i)
                sum += std::pow(std::abs(f.values[static_cast<std::size_t>(c) * per_cell + i]), p);
            cell_norms[c] = std::pow(h * sum, 1.0 / p);
        }
    }
    if (global.is_infinite())
        return *std::max_element(cell_norms.begin(), cell_norms.end());
    const double q = global.p_double();
    double sum = 0.0;
    for (double v : cell_norms) sum += std::pow(v, q);
    return std::pow(sum, 1.0 / q);
}

GridFunction random_smooth(Rng& rng, int resolution) {
    GridFunction f = GridFunction::unit_interval(resolution);
    const int modes = 5;
    std::vector<std::complex<double>> coeff(modes);
    for (auto& c : coeff) c = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double twopi = 2.0 * std::acos(-1.0);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = f.x_at(i);
        std::complex<double> v = 0.0;
        for (int k = 0; k < modes; ++k)
            v += coeff[k] * std::exp(std::complex<double>(0.0, twopi * k * x));
        f.values[i] = v;
    }
    return f;
}

GridFunction random_central_bump(Rng& rng, int halfwidth, int resolution) {
    GridFunction f = GridFunction::real_window(halfwidth, resolution);
    const double half = 0.5 * halfwidth;
    const int bumps = static_cast<int>(rng.uniform_int(1, 3));
    std::vector<double> center(bumps), width(bumps);
    std::vector<std::complex<double>> amp(bumps);
    for (int b = 0; b < bumps; ++b) {
        center[b] = rng.uniform(-0.8 * half, 0.8 * half);
        width[b] = rng.uniform(0.05, 0.5);
        amp[b] = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = f.x_at(i);
        if (std::abs(x) >= half) continue;  // exact zero outside the central half
        std::complex<double> v = 0.0;
        for (int b = 0; b < bumps; ++b) {
            const double d = (x - center[b]) / width[b];
            v += amp[b] * std::exp(-d * d);
        }
        f.values[i] = v;
    }
    return f;
}

GridFunction random_spiky(Rng& rng, int resolution) {
    GridFunction f = GridFunction::unit_interval(resolution);
    const int spikes = static_cast<int>(rng.uniform_int(3, 6));
    const double floor_level = rng.uniform(0.01, 0.05);
    for (auto& v : f.values) v = floor_level;
    for (int s = 0; s < spikes; ++s) {
        const double center = rng.uniform(0.05, 0.95);
        const double width = rng.uniform(2.0 / resolution, 0.03);
        const double amp = std::pow(10.0, rng.uniform(-0.5, 1.0));
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const double d = (f.x_at(i) - center) / width;
            f.values[i] += amp * std::exp(-d * d);
        }
    }
    return f;
}

GridFunction indicator(double a, double b, int halfwidth, int resolution) {
    GridFunction f = GridFunction::real_window(halfwidth, resolution);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = f.x_at(i);
        if (x >= a && x <= b) f.values[i] = 1.0;
    }
    return f;
}

}  // namespace parlat
