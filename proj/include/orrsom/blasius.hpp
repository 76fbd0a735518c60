#pragma once

// Flat-plate boundary-layer similarity solution: finds f with
//   2 f''' + f f'' = 0,   f(0) = f'(0) = 0,   f'(x) -> 1 as x -> infinity,
// by shooting on the wall curvature s = f''(0). The flow profile is V = f'.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orrsom {

struct BlasiusSolution {
    double shoot_parameter = 0.0;  // f''(0)
    double x_max = 0.0;
    double step = 0.0;             // uniform RK4 step
    int interpolation_order = 3;   // cubic Hermite between samples
    double far_field_error = 0.0;  // |f'(x_max) - 1|
    int root_iterations = 0;

    // Samples on the uniform grid x_k = k*step, k = 0..m.
    std::vector<double> x, f, fp, fpp, fppp;

    // Hermite interpolation of (f, f', f'', f''') at arbitrary x >= 0.
    // Beyond x_max the far-field state (x - shift, 1, 0, 0) is used.
    struct State {
        double f, fp, fpp, fppp;
    };

    State eval(double xq) const {
        if (!(xq >= 0.0)) throw std::invalid_argument("blasius: eval requires x >= 0");
        if (xq >= x_max) {
            const double shift = x_max - f.back();
            return {xq - shift, 1.0, 0.0, 0.0};
        }
        const std::size_t m = x.size() - 1;
        std::size_t k = static_cast<std::size_t>(xq / step);
        if (k >= m) k = m - 1;
        const double h = step;
        const double t = (xq - x[k]) / h;
        // Hermite basis on [0,1]
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        auto hermite = [&](double y0, double d0, double y1, double d1) {
            return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
        };
        // f'''' from the governing equation, used as the slope of f'''.
        auto f4 = [&](std::size_t i) { return -0.5 * (fp[i] * fpp[i] + f[i] * fppp[i]); };
        return {hermite(f[k], fp[k], f[k + 1], fp[k + 1]),
                hermite(fp[k], fpp[k], fp[k + 1], fpp[k + 1]),
                hermite(fpp[k], fppp[k], fpp[k + 1], fppp[k + 1]),
                hermite(fppp[k], f4(k), fppp[k + 1], f4(k + 1))};
    }
};

namespace detail {

// RK4 on (f, f', f'') with f''' = -f f'' / 2. Returns the end state; when
// `record` is non-null, stores every step. Throws on blow-up.
inline std::array<double, 3> integrate_blasius(double s, double x_max, double h,
                                               BlasiusSolution* record = nullptr) {
    const auto m = static_cast<std::size_t>(std::llround(x_max / h));
    std::array<double, 3> y{0.0, 0.0, s};
    auto rhs = [](const std::array<double, 3>& u) {
        return std::array<double, 3>{u[1], u[2], -0.5 * u[0] * u[2]};
    };
    auto push = [&](double xk, const std::array<double, 3>& u) {
        record->x.push_back(xk);
        record->f.push_back(u[0]);
        record->fp.push_back(u[1]);
        record->fpp.push_back(u[2]);
        record->fppp.push_back(-0.5 * u[0] * u[2]);
    };
    if (record) {
        record->x.reserve(m + 1);
        record->f.reserve(m + 1);
        record->fp.reserve(m + 1);
        record->fpp.reserve(m + 1);
        record->fppp.reserve(m + 1);
        push(0.0, y);
    }
    for (std::size_t k = 0; k < m; ++k) {
        const auto k1 = rhs(y);
        std::array<double, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = y[i] + 0.5 * h * k1[i];
        const auto k2 = rhs(t);
        for (int i = 0; i < 3; ++i) t[i] = y[i] + 0.5 * h * k2[i];
        const auto k3 = rhs(t);
        for (int i = 0; i < 3; ++i) t[i] = y[i] + h * k3[i];
        const auto k4 = rhs(t);
        for (int i = 0; i < 3; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        if (!(std::abs(y[0]) < 1e8 && std::abs(y[1]) < 1e8 && std::abs(y[2]) < 1e8))
            throw std::runtime_error("blasius: integration blow-up at s=" + std::to_string(s));
        if (record) push(static_cast<double>(k + 1) * h, y);
    }
    return y;
}

}  // namespace detail

// Shooting with a bracketed secant/bisection hybrid on s = f''(0).
// Bracket [0.1, 1.0]; the far-field mismatch f'(x_max) - 1 is strictly
// increasing in s, so a sign change identifies the root.
inline BlasiusSolution solve_blasius(double x_max = 20.0, double tol_far = 1e-10,
                                     double tol_root = 1e-12, double step = 1e-3) {
    if (!(x_max >= 10.0)) throw std::invalid_argument("blasius: x_max must be >= 10");
    if (!(tol_far > 0.0 && tol_root > 0.0 && step > 0.0))
        throw std::invalid_argument("blasius: tolerances and step must be positive");

    auto mismatch = [&](double s) { return detail::integrate_blasius(s, x_max, step)[1] - 1.0; };

    double lo = 0.1, hi = 1.0;
    double glo = mismatch(lo), ghi = mismatch(hi);
    if (!(glo < 0.0 && ghi > 0.0))
        throw std::runtime_error("blasius: initial bracket [0.1, 1.0] does not enclose a root");

    double s = lo, g = glo;
    double s_prev = hi, g_prev = ghi;
    const int max_iter = 200;
    int it = 0;
    for (; it < max_iter; ++it) {
        // Secant candidate, accepted only if it lands strictly inside bracket.
        double cand = s - g * (s - s_prev) / (g - g_prev);
        if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
        const double gc = mismatch(cand);
        s_prev = s;
        g_prev = g;
        s = cand;
        g = gc;
        if (gc > 0.0)
            hi = cand;
        else
            lo = cand;
        if (std::abs(gc) <= 0.1 * tol_far || hi - lo <= tol_root) break;
    }
    if (std::abs(g) > tol_far && hi - lo > tol_root)
        throw std::runtime_error("blasius: shooting did not converge within iteration cap");

    BlasiusSolution sol;
    sol.shoot_parameter = s;
    sol.x_max = x_max;
    sol.step = step;
    sol.root_iterations = it + 1;
    const auto end = detail::integrate_blasius(s, x_max, step, &sol);
    sol.far_field_error = std::abs(end[1] - 1.0);
    if (sol.far_field_error > tol_far)
        throw std::runtime_error("blasius: far-field tolerance not met");
    return sol;
}

}  // namespace orrsom
