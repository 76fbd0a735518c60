#pragma once

// Closed-form functions in the operator domain (u(0) = u'(0) = 0 with
// exponential decay), evaluable with derivatives up to fourth order. Used
// as probes for operator identities and Rayleigh-quotient checks.

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace orrsom {

struct TrialFunction {
    std::string name;
    // value and derivatives 1..4 at x
    std::function<std::array<double, 5>(double)> derivs;

    std::array<double, 5> operator()(double x) const { return derivs(x); }
    double u(double x) const { return derivs(x)[0]; }
    double du(double x, int order) const { return derivs(x)[order]; }
};

namespace detail {

// Leibniz product of two jets of length 5.
inline std::array<double, 5> jet_product(const std::array<double, 5>& a,
                                         const std::array<double, 5>& b) {
    static constexpr int binom[5][5] = {{1, 0, 0, 0, 0},
                                        {1, 1, 0, 0, 0},
                                        {1, 2, 1, 0, 0},
                                        {1, 3, 3, 1, 0},
                                        {1, 4, 6, 4, 1}};
    std::array<double, 5> out{};
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j <= k; ++j) out[k] += binom[k][j] * a[j] * b[k - j];
    return out;
}

// jet of x^p e^{-beta x} for p in {2, 3}
inline std::array<double, 5> poly_exp_jet(int p, double beta, double x) {
    const double e = std::exp(-beta * x);
    auto monomial = [&](int q) -> double {
        // q-th derivative of x^p
        double coef = 1.0;
        for (int i = 0; i < q; ++i) coef *= (p - i);
        if (q > p) return 0.0;
        return coef * std::pow(x, p - q);
    };
    std::array<double, 5> mono{}, expo{};
    for (int k = 0; k < 5; ++k) {
        mono[k] = monomial(k);
        expo[k] = std::pow(-beta, k) * e;
    }
    return jet_product(mono, expo);
}

}  // namespace detail

// u = x^2 e^{-x}; u''(0) = 2
inline TrialFunction trial_x2_exp() {
    return {"x^2 exp(-x)", [](double x) { return detail::poly_exp_jet(2, 1.0, x); }};
}

// u = x^3 e^{-x}; u''(0) = 0
inline TrialFunction trial_x3_exp() {
    return {"x^3 exp(-x)", [](double x) { return detail::poly_exp_jet(3, 1.0, x); }};
}

// u = x^2 e^{-x} sin(x)
inline TrialFunction trial_x2_exp_sin() {
    return {"x^2 exp(-x) sin(x)", [](double x) {
                const auto pe = detail::poly_exp_jet(2, 1.0, x);
                const double s = std::sin(x), c = std::cos(x);
                const std::array<double, 5> trig{s, c, -s, -c, s};
                return detail::jet_product(pe, trig);
            }};
}

// alpha x^2 e^{-beta x} (1 + gamma sin x) -- the parameterized family used
// by randomized property checks
inline TrialFunction trial_family(double alpha, double beta, double gamma) {
    return {"family(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
                std::to_string(gamma) + ")",
            [alpha, beta, gamma](double x) {
                auto pe = detail::poly_exp_jet(2, beta, x);
                const double s = std::sin(x), c = std::cos(x);
                const std::array<double, 5> mod{1.0 + gamma * s, gamma * c, -gamma * s,
                                                -gamma * c, gamma * s};
                auto out = detail::jet_product(pe, mod);
                for (auto& v : out) v *= alpha;
                return out;
            }};
}

}  // namespace orrsom
