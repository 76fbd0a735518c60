#pragma once

// Discretization of the fourth-order pencil
//   A u = (-D^2 + a^2)^2 u + i a R [ V (-D^2 + a^2) u + V'' u ],
//   B u = (-D^2 + a^2) u,
// on a mapped Chebyshev grid. The four clamped conditions are imposed by
// boundary bordering: the corresponding rows of A are replaced by the
// constraint equations and the same rows of B are zeroed. The zero B-rows
// create spurious infinite-magnitude eigenvalues handled downstream.

#include <cmath>
#include <complex>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

#include "orrsom/diff_ops.hpp"
#include "orrsom/grid.hpp"
#include "orrsom/profile.hpp"
#include "orrsom/trial_function.hpp"

namespace orrsom {

using Complex = std::complex<double>;

struct Pencil {
    Eigen::MatrixXcd A, B;
    double a = 0.0, R = 0.0;
    Grid grid;
    std::array<int, 4> boundary_rows{};
    std::shared_ptr<const FlowProfile> profile;

    int size() const { return static_cast<int>(A.rows()); }
};

inline Pencil assemble_pencil(const FlowProfile& p, double a, double R, const Grid& g) {
    if (!(a > 0.0)) throw std::invalid_argument("assemble_pencil: wave number must be positive");
    if (!(R > 0.0)) throw std::invalid_argument("assemble_pencil: Reynolds number must be positive");
    const int n = g.n;
    const DiffOps ops = diff_ops(g);

    Eigen::VectorXd v(n), d2v(n);
    for (int k = 0; k < n; ++k) {
        const auto s = p.eval(g.nodes[k]);
        if (!std::isfinite(s.v) || !std::isfinite(s.d2v))
            throw std::runtime_error("assemble_pencil: profile not evaluable at node");
        v[k] = s.v;
        d2v[k] = s.d2v;
    }

    const Eigen::MatrixXd l2 = -ops.d2 + a * a * Eigen::MatrixXd::Identity(n, n);

    Pencil pc;
    pc.a = a;
    pc.R = R;
    pc.grid = g;
    pc.boundary_rows = ops.boundary_rows;
    pc.profile = std::make_shared<FlowProfile>(p);
    pc.A = (l2 * l2).cast<Complex>() +
           Complex(0.0, a * R) * ((v.asDiagonal() * l2).cast<Complex>() +
                                  d2v.cast<Complex>().asDiagonal().toDenseMatrix());
    pc.B = l2.cast<Complex>();

    for (int r = 0; r < 4; ++r) {
        const int row = ops.boundary_rows[r];
        pc.A.row(row) = ops.constraints.row(r).cast<Complex>();
        pc.B.row(row).setZero();
    }
    return pc;
}

// Quadrature inner product <u, v> = sum w_k u_k conj(v_k). Nodes with zero
// weight (the point at infinity) are skipped so decaying data never produces
// inf * 0.
inline Complex inner_product(const Grid& g, const Eigen::VectorXcd& u,
                             const Eigen::VectorXcd& v) {
    if (u.size() != g.n || v.size() != g.n)
        throw std::invalid_argument("inner_product: dimension mismatch with grid");
    Complex acc = 0.0;
    for (int k = 0; k < g.n; ++k) {
        if (g.weights[k] == 0.0) continue;
        acc += g.weights[k] * u[k] * std::conj(v[k]);
    }
    return acc;
}

struct BinvA0Result {
    Eigen::VectorXcd lhs;  // numerical solve of B w = A0 u
    Eigen::VectorXcd rhs;  // closed form -u'' + (a^2 + i a R) u + u''(0) e^{-a x}
};

// Numerical check of the identity B^{-1} A0 u = -u'' + (a^2 + iaR) u +
// u''(0) e^{-ax} for admissible u, where A0 is the pencil's constant-profile
// part. A0 u is formed from the closed-form derivatives of u; the solve
// imposes Dirichlet conditions at both ends (decay at the far boundary).
inline BinvA0Result apply_binv_a0(const Grid& g, double a, double R, const TrialFunction& u) {
    const int n = g.n;
    const DiffOps ops = diff_ops(g);
    const Complex coef(a * a, a * R);

    Eigen::VectorXcd a0u(n), rhs(n);
    const double u2_at_0 = u.du(0.0, 2);
    for (int k = 0; k < n; ++k) {
        const double x = g.nodes[k];
        if (std::isinf(x)) {
            a0u[k] = 0.0;
            rhs[k] = 0.0;
            continue;
        }
        const auto j = u(x);
        a0u[k] = j[4] - 2.0 * a * a * j[2] + std::pow(a, 4) * j[0] + Complex(0.0, a * R) * (-j[2] + a * a * j[0]);
        rhs[k] = -j[2] + coef * j[0] + u2_at_0 * std::exp(-a * x);
    }

    Eigen::MatrixXcd b = (-ops.d2 + a * a * Eigen::MatrixXd::Identity(n, n)).cast<Complex>();
    b.row(0).setZero();
    b(0, 0) = 1.0;
    b.row(n - 1).setZero();
    b(n - 1, n - 1) = 1.0;
    a0u[0] = 0.0;
    a0u[n - 1] = 0.0;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(b);
    BinvA0Result out;
    out.lhs = lu.solve(a0u);
    if (!out.lhs.allFinite()) throw std::runtime_error("apply_binv_a0: singular solve");
    out.rhs = rhs;
    return out;
}

// Debug export: textual matrix dump, one `re im` pair per entry, row-major.
inline void write_matrix(std::ostream& os, const Eigen::MatrixXcd& m, const char* name) {
    os << "% orrsom complex matrix " << name << "\n";
    os << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << m(i, j).real() << " " << m(i, j).imag() << "\n";
}

inline void write_pencil(std::ostream& os, const Pencil& p) {
    write_matrix(os, p.A, "A");
    write_matrix(os, p.B, "B");
}

}  // namespace orrsom
