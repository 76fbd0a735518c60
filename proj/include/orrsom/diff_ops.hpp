#pragma once

// Dense spectral differentiation matrices on a mapped Chebyshev grid, plus
// the bookkeeping needed to impose the clamped conditions
//   u(0) = u'(0) = 0,   u = u' = 0 at the far boundary
// by boundary bordering (row replacement) during pencil assembly.

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

#include "orrsom/grid.hpp"

namespace orrsom {

struct DiffOps {
    Eigen::MatrixXd d1, d2, d4;

    // Rows sacrificed to the four clamped conditions, and the constraint
    // row vectors that replace them (same order as boundary_rows).
    std::array<int, 4> boundary_rows{};
    Eigen::MatrixXd constraints;  // 4 x n

    bool is_boundary_row(int i) const {
        for (int b : boundary_rows)
            if (i == b) return true;
        return false;
    }
};

namespace detail {

// First-derivative Chebyshev collocation matrix on the reference nodes
// (increasing order), with the negative-sum trick on the diagonal.
inline Eigen::MatrixXd chebyshev_d1(const Eigen::VectorXd& t) {
    const int n = static_cast<int>(t.size());
    const int m = n - 1;
    Eigen::VectorXd c(n);
    for (int i = 0; i < n; ++i) {
        // endpoint weight 2, alternating sign; node order is the reverse of
        // the classical cos(j pi / m) ordering, which only flips the signs
        c[i] = ((i == 0 || i == m) ? 2.0 : 1.0) * ((m - i) % 2 == 0 ? 1.0 : -1.0);
    }
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            d(i, j) = (c[i] / c[j]) / (t[i] - t[j]);
            row_sum += d(i, j);
        }
        d(i, i) = -row_sum;
    }
    return d;
}

}  // namespace detail

inline DiffOps diff_ops(const Grid& g) {
    const int n = g.n;
    const Eigen::MatrixXd dt1 = detail::chebyshev_d1(g.ref_nodes);
    const Eigen::MatrixXd dt2 = dt1 * dt1;

    DiffOps ops;
    ops.boundary_rows = {0, 1, n - 2, n - 1};

    if (g.scheme == GridScheme::TruncatedChebyshev) {
        const double s = 2.0 / g.map_param;  // dt/dx
        ops.d1 = s * dt1;
        ops.d2 = (s * s) * dt2;
        ops.d4 = ops.d2 * ops.d2;
    } else {
        // x = L (1+t)/(1-t): chain rule with t_x = (1-t)^2 / (2L) and its
        // derivatives; every factor vanishes at the point at infinity.
        const double L = g.map_param;
        Eigen::VectorXd tx(n), txx(n), txxx(n), txxxx(n);
        for (int j = 0; j < n; ++j) {
            const double om = 1.0 - g.ref_nodes[j];
            tx[j] = om * om / (2.0 * L);
            txx[j] = -om * om * om / (2.0 * L * L);
            txxx[j] = 3.0 * om * om * om * om / (4.0 * L * L * L);
            txxxx[j] = -3.0 * om * om * om * om * om / (2.0 * L * L * L * L);
        }
        const Eigen::MatrixXd dt3 = dt2 * dt1;
        const Eigen::MatrixXd dt4 = dt2 * dt2;
        ops.d1 = tx.asDiagonal() * dt1;
        ops.d2 = tx.array().square().matrix().asDiagonal() * dt2 + txx.asDiagonal() * dt1;
        Eigen::VectorXd c4 = tx.array().pow(4.0);
        Eigen::VectorXd c3 = 6.0 * tx.array().square() * txx.array();
        Eigen::VectorXd c2 = 3.0 * txx.array().square() + 4.0 * tx.array() * txxx.array();
        ops.d4 = c4.asDiagonal() * dt4 + c3.asDiagonal() * dt3 + c2.asDiagonal() * dt2 +
                 txxxx.asDiagonal() * dt1;
    }

    ops.constraints = Eigen::MatrixXd::Zero(4, n);
    ops.constraints(0, 0) = 1.0;            // u(0) = 0
    ops.constraints.row(1) = ops.d1.row(0);  // u'(0) = 0
    if (g.scheme == GridScheme::TruncatedChebyshev) {
        ops.constraints.row(2) = ops.d1.row(n - 1);  // u'(X_max) = 0
    } else {
        // d1's far row is identically zero under the algebraic map; impose
        // decay of the slope in reference coordinates instead
        ops.constraints.row(2) = dt1.row(n - 1);
    }
    ops.constraints(3, n - 1) = 1.0;  // u = 0 at the far boundary
    return ops;
}

}  // namespace orrsom
