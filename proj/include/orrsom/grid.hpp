#pragma once

// Collocation grids on the semiaxis. Chebyshev-Gauss-Lobatto nodes on the
// reference interval [-1, 1] (stored in increasing order) are pushed to
// [0, X_max] by linear truncation or to [0, infinity) by the algebraic map
// x = L (1 + t) / (1 - t). Quadrature weights are Clenshaw-Curtis weights
// scaled by the map Jacobian; the point at infinity carries zero weight.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace orrsom {

enum class GridScheme { TruncatedChebyshev, AlgebraicMap };

inline const char* to_string(GridScheme s) {
    return s == GridScheme::TruncatedChebyshev ? "truncated" : "algebraic";
}

inline GridScheme grid_scheme_from_string(const std::string& s) {
    if (s == "truncated") return GridScheme::TruncatedChebyshev;
    if (s == "algebraic") return GridScheme::AlgebraicMap;
    throw std::invalid_argument("unknown grid scheme: " + s);
}

struct Grid {
    GridScheme scheme = GridScheme::TruncatedChebyshev;
    int n = 0;               // number of collocation nodes
    double map_param = 0.0;  // X_max (truncation) or L (algebraic)
    Eigen::VectorXd ref_nodes;  // t in [-1, 1], increasing
    Eigen::VectorXd nodes;      // x = phi(t), increasing, nodes[0] = 0
    Eigen::VectorXd weights;    // quadrature weights for integrals over x

    // truncation length, or the map scale for the semiaxis scheme
    double x_max() const { return map_param; }
};

namespace detail {

// Clenshaw-Curtis weights for m+1 Chebyshev-Lobatto points on [-1, 1].
// The weights are symmetric, so node ordering does not matter.
inline Eigen::VectorXd clenshaw_curtis_weights(int m) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(m + 1);
    if (m == 0) {
        w[0] = 2.0;
        return w;
    }
    const double pi = std::numbers::pi;
    const double end = (m % 2 == 0) ? 1.0 / (m * m - 1.0) : 1.0 / (m * m);
    w[0] = w[m] = end;
    for (int i = 1; i < m; ++i) {
        const double theta = pi * i / m;
        double v = 1.0;
        for (int k = 1; k <= (m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2); ++k)
            v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        if (m % 2 == 0) v -= std::cos(m * theta) / (m * m - 1.0);
        w[i] = 2.0 * v / m;
    }
    return w;
}

}  // namespace detail

inline Grid build_grid(GridScheme scheme, int n, double map_param) {
    if (n < 8) throw std::invalid_argument("build_grid: need at least 8 nodes");
    if (!(map_param > 0.0)) throw std::invalid_argument("build_grid: map parameter must be positive");

    Grid g;
    g.scheme = scheme;
    g.n = n;
    g.map_param = map_param;
    const int m = n - 1;
    g.ref_nodes.resize(n);
    const double pi = std::numbers::pi;
    for (int j = 0; j <= m; ++j) g.ref_nodes[j] = -std::cos(pi * j / m);
    g.ref_nodes[0] = -1.0;
    g.ref_nodes[m] = 1.0;
    if (n % 2 == 1) g.ref_nodes[m / 2] = 0.0;

    const Eigen::VectorXd wt = detail::clenshaw_curtis_weights(m);
    g.nodes.resize(n);
    g.weights.resize(n);
    if (scheme == GridScheme::TruncatedChebyshev) {
        const double half = 0.5 * map_param;
        for (int j = 0; j < n; ++j) {
            g.nodes[j] = half * (1.0 + g.ref_nodes[j]);
            g.weights[j] = wt[j] * half;
        }
        g.nodes[0] = 0.0;
        g.nodes[n - 1] = map_param;
    } else {
        const double L = map_param;
        for (int j = 0; j < n; ++j) {
            const double t = g.ref_nodes[j];
            if (j == n - 1) {
                g.nodes[j] = std::numeric_limits<double>::infinity();
                g.weights[j] = 0.0;  // integrands are required to decay
            } else {
                g.nodes[j] = L * (1.0 + t) / (1.0 - t);
                const double jac = 2.0 * L / ((1.0 - t) * (1.0 - t));
                g.weights[j] = wt[j] * jac;
            }
        }
        g.nodes[0] = 0.0;
    }
    return g;
}

}  // namespace orrsom
