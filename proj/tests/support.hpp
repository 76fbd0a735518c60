#pragma once

// Test-only oracles, independent of the library code paths they check:
//  - step-halving refinement of the shooting parameter
//  - finite-difference residual of the similarity ODE on the stored grid
//  - sampling (Minkowski-sum) membership oracle for the enclosure regions
//  - seedable RNG for property checks (ORRSOM_SEED)

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <random>
#include <vector>

#include "orrsom/blasius.hpp"

namespace testsupport {

inline std::mt19937_64 make_rng(unsigned bump = 0) {
    unsigned long long seed = 20260811ull;
    if (const char* env = std::getenv("ORRSOM_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed + bump);
}

// Repeats the shooting solve with halved steps until the parameter
// stabilizes to `tol`; the converged value is the reference for f''(0).
inline double blasius_shoot_oracle(double tol = 1e-7) {
    double h = 1e-3;
    double prev = orrsom::solve_blasius(20.0, 1e-10, 1e-12, h).shoot_parameter;
    for (int i = 0; i < 6; ++i) {
        h *= 0.5;
        const double cur = orrsom::solve_blasius(20.0, 1e-10, 1e-12, h).shoot_parameter;
        if (std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    return prev;
}

// max_k | 2 f'''(x_k) + f(x_k) f''(x_k) | with f''' obtained by fourth-order
// finite differences of the stored f'' samples (not from the equation).
inline double blasius_fd_residual(const orrsom::BlasiusSolution& sol) {
    const auto& f = sol.f;
    const auto& fpp = sol.fpp;
    const double h = sol.step;
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(f.size()) - 1;
    auto d1 = [&](std::ptrdiff_t k) -> double {
        if (k >= 2 && k <= m - 2)
            return (fpp[k - 2] - 8 * fpp[k - 1] + 8 * fpp[k + 1] - fpp[k + 2]) / (12 * h);
        if (k == 0)
            return (-25 * fpp[0] + 48 * fpp[1] - 36 * fpp[2] + 16 * fpp[3] - 3 * fpp[4]) /
                   (12 * h);
        if (k == 1)
            return (-3 * fpp[0] - 10 * fpp[1] + 18 * fpp[2] - 6 * fpp[3] + fpp[4]) / (12 * h);
        if (k == m - 1)
            return (3 * fpp[m] + 10 * fpp[m - 1] - 18 * fpp[m - 2] + 6 * fpp[m - 3] -
                    fpp[m - 4]) /
                   (12 * h);
        return (25 * fpp[m] - 48 * fpp[m - 1] + 36 * fpp[m - 2] - 16 * fpp[m - 3] +
                3 * fpp[m - 4]) /
               (12 * h);
    };
    double worst = 0.0;
    for (std::ptrdiff_t k = 0; k <= m; ++k)
        worst = std::max(worst, std::abs(2.0 * d1(k) + f[k] * fpp[k]));
    return worst;
}

// Distance from z to the Minkowski sum S + r*D (D the unit disc, or its
// lower half when half_disc is set), where S = [a2, inf) x i [im_min,
// im_max]. Computed by sampling w over S on nested refined grids with the
// d-component resolved against the sampled disc exactly; independent of the
// clamped-coordinate membership predicate in the library.
inline double minkowski_distance_oracle(std::complex<double> z, double a2, double im_min,
                                        double im_max, double r, bool half_disc) {
    auto disc_distance = [&](std::complex<double> zeta) -> double {
        if (!half_disc || zeta.imag() <= 0.0) return std::max(std::abs(zeta) - r, 0.0);
        // above the diameter: nearest points of the half disc lie on [-r, r]
        return std::hypot(std::max(std::abs(zeta.real()) - r, 0.0), zeta.imag());
    };

    double re_lo = a2, re_hi = std::max(a2, z.real()) + 2.0 * r + 1.0;
    double im_lo = im_min, im_hi = im_max;
    double best = std::numeric_limits<double>::infinity();
    const int m = 32;
    for (int level = 0; level < 36; ++level) {
        double level_best = std::numeric_limits<double>::infinity();
        double arg_re = re_lo, arg_im = im_lo;
        for (int i = 0; i <= m; ++i) {
            const double wre = re_lo + (re_hi - re_lo) * i / m;
            for (int j = 0; j <= m; ++j) {
                const double wim = im_lo + (im_hi - im_lo) * j / m;
                const double d = disc_distance(z - std::complex<double>(wre, wim));
                if (d < level_best) {
                    level_best = d;
                    arg_re = wre;
                    arg_im = wim;
                }
            }
        }
        best = std::min(best, level_best);
        if (best == 0.0) return 0.0;
        const double cell_re = (re_hi - re_lo) / m, cell_im = (im_hi - im_lo) / m;
        re_lo = std::max(a2, arg_re - 2.0 * cell_re);
        re_hi = arg_re + 2.0 * cell_re;
        im_lo = std::max(im_min, arg_im - 2.0 * cell_im);
        im_hi = std::min(im_max, arg_im + 2.0 * cell_im);
        if (cell_re < 1e-14 * (1.0 + std::abs(arg_re)) &&
            cell_im < 1e-14 * (1.0 + std::abs(arg_im)))
            break;
    }
    return best;
}

}  // namespace testsupport
