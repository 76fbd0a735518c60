#pragma once

// Dense complex generalized eigensolver for A u = lambda B u.
//
// Default path: eliminate the constraint rows (rows where B is identically
// zero) against their own columns, factor the reduced B, and solve the
// standard eigenproblem B^{-1} A by Hessenberg reduction + shifted QR
// (Eigen's ComplexEigenSolver). Fallback path when the reduced B is
// ill-conditioned: QZ simultaneous triangularization (LAPACK zggev).
//
// Every reported eigenvalue carries a residual from one inverse-iteration
// step; filtering marks eigenvalues kept when the residual and magnitude
// pass thresholds, and two-grid filtering compares against a finer run.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#ifdef ORRSOM_HAVE_LAPACKE
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

#include "orrsom/pencil.hpp"
#include "orrsom/spectrum.hpp"

namespace orrsom {

struct SolveOptions {
    double residual_tol = 1e-8;
    double magnitude_cutoff = 1e8;
    double condition_trigger = 1e10;  // switch to QZ above this estimate
    bool force_qz = false;
};

// ||(A - lambda B) v||_2 / ||v||_2
inline double residual(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                       std::complex<double> lambda, const Eigen::VectorXcd& v) {
    const double nv = v.norm();
    if (!(nv > 0.0)) throw std::invalid_argument("residual: zero vector");
    return (A * v - lambda * (B * v)).norm() / nv;
}

inline double residual(const Pencil& p, std::complex<double> lambda, const Eigen::VectorXcd& v) {
    return residual(p.A, p.B, lambda, v);
}

namespace detail {

// One inverse-iteration step to sharpen an approximate eigenvector, with a
// small Tikhonov shift retry if the factorization is exactly singular.
inline double refined_residual(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                               std::complex<double> lambda, Eigen::VectorXcd v,
                               double matrix_scale) {
    v.normalize();
    double best = (A * v - lambda * (B * v)).norm();
    Eigen::MatrixXcd shifted = A - lambda * B;
    Eigen::VectorXcd w = Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).solve(v);
    if (!w.allFinite() || w.norm() == 0.0) {
        shifted.diagonal().array() += std::complex<double>(1e-12 * matrix_scale, 0.0);
        w = Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).solve(v);
    }
    if (w.allFinite() && w.norm() > 0.0) {
        w.normalize();
        best = std::min(best, (A * w - lambda * (B * w)).norm());
    }
    return best;
}

struct RawEigen {
    std::vector<std::complex<double>> values;
    std::vector<Eigen::VectorXcd> vectors;  // full-length vectors
    int n_infinite = 0;
    double condition_estimate = 0.0;  // of the reduced B factor
};

#ifdef ORRSOM_HAVE_LAPACKE
inline RawEigen solve_qz(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    const auto n = static_cast<lapack_int>(A.rows());
    Eigen::MatrixXcd a = A, b = B, vr(n, n);
    std::vector<std::complex<double>> alpha(n), beta(n);
    const lapack_int info = LAPACKE_zggev(
        LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, b.data(), n, alpha.data(), beta.data(),
        nullptr, 1, vr.data(), n);
    if (info != 0) throw std::runtime_error("solve_pencil: zggev failed to converge");
    RawEigen out;
    for (lapack_int i = 0; i < n; ++i) {
        const double ab = std::abs(alpha[i]), bb = std::abs(beta[i]);
        if (bb == 0.0 || ab > bb * 1e14) {
            ++out.n_infinite;
            continue;
        }
        out.values.push_back(alpha[i] / beta[i]);
        out.vectors.push_back(vr.col(i));
    }
    return out;
}
#endif

inline RawEigen solve_reduction(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                const std::vector<int>& bnd, double condition_trigger,
                                bool* ill_conditioned) {
    const int n = static_cast<int>(A.rows());
    std::vector<int> interior;
    interior.reserve(n - bnd.size());
    {
        std::vector<char> is_bnd(n, 0);
        for (int b : bnd) is_bnd[b] = 1;
        for (int i = 0; i < n; ++i)
            if (!is_bnd[i]) interior.push_back(i);
    }
    const int ni = static_cast<int>(interior.size());
    const int nb = static_cast<int>(bnd.size());

    Eigen::MatrixXcd a_red(ni, ni), b_red(ni, ni);
    Eigen::MatrixXcd coupling;  // nb x ni, boundary values from interior ones
    if (nb > 0) {
        Eigen::MatrixXcd cb(nb, nb), ci(nb, ni);
        for (int r = 0; r < nb; ++r) {
            for (int c = 0; c < nb; ++c) cb(r, c) = A(bnd[r], bnd[c]);
            for (int c = 0; c < ni; ++c) ci(r, c) = A(bnd[r], interior[c]);
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(cb);
        coupling = -lu.solve(ci);
        if (!coupling.allFinite()) {
            *ill_conditioned = true;
            return {};
        }
        Eigen::MatrixXcd a_ii(ni, ni), a_ib(ni, nb), b_ii(ni, ni), b_ib(ni, nb);
        for (int r = 0; r < ni; ++r) {
            for (int c = 0; c < ni; ++c) {
                a_ii(r, c) = A(interior[r], interior[c]);
                b_ii(r, c) = B(interior[r], interior[c]);
            }
            for (int c = 0; c < nb; ++c) {
                a_ib(r, c) = A(interior[r], bnd[c]);
                b_ib(r, c) = B(interior[r], bnd[c]);
            }
        }
        a_red = a_ii + a_ib * coupling;
        b_red = b_ii + b_ib * coupling;
    } else {
        a_red = A;
        b_red = B;
    }

    Eigen::PartialPivLU<Eigen::MatrixXcd> blu(b_red);
    const double rcond = blu.rcond();
    if (!(rcond > 1.0 / condition_trigger)) {
        *ill_conditioned = true;
        return {};
    }
    const double condition_estimate = 1.0 / rcond;
    const Eigen::MatrixXcd m = blu.solve(a_red);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(m, true);
    if (ces.info() != Eigen::Success)
        throw std::runtime_error("solve_pencil: QR iteration did not converge");

    RawEigen out;
    out.n_infinite = nb;
    out.condition_estimate = condition_estimate;
    out.values.reserve(ni);
    for (int i = 0; i < ni; ++i) {
        out.values.push_back(ces.eigenvalues()[i]);
        Eigen::VectorXcd full = Eigen::VectorXcd::Zero(n);
        const Eigen::VectorXcd vi = ces.eigenvectors().col(i);
        for (int r = 0; r < ni; ++r) full[interior[r]] = vi[r];
        if (nb > 0) {
            const Eigen::VectorXcd vb = coupling * vi;
            for (int r = 0; r < nb; ++r) full[bnd[r]] = vb[r];
        }
        out.vectors.push_back(std::move(full));
    }
    return out;
}

inline std::vector<int> zero_b_rows(const Eigen::MatrixXcd& B) {
    std::vector<int> rows;
    for (Eigen::Index i = 0; i < B.rows(); ++i)
        if (B.row(i).cwiseAbs().maxCoeff() == 0.0) rows.push_back(static_cast<int>(i));
    return rows;
}

}  // namespace detail

inline Spectrum solve_pencil(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                             const SolveOptions& opts = {}) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("solve_pencil: matrices must be square of equal size");
    const int n = static_cast<int>(A.rows());
    const std::vector<int> bnd = detail::zero_b_rows(B);

    detail::RawEigen raw;
    bool ill_conditioned = false;
    std::string path = "reduction";
    if (!opts.force_qz)
        raw = detail::solve_reduction(A, B, bnd, opts.condition_trigger, &ill_conditioned);
    if (opts.force_qz || ill_conditioned) {
#ifdef ORRSOM_HAVE_LAPACKE
        raw = detail::solve_qz(A, B);
        path = "qz";
#else
        throw std::runtime_error("solve_pencil: reduction ill-conditioned and QZ unavailable");
#endif
    }

    const double na = A.norm(), nb_norm = B.norm();

    Spectrum s;
    s.matrix_size = n;
    s.grid_n = n;
    s.residual_tol = opts.residual_tol;
    s.magnitude_cutoff = opts.magnitude_cutoff;
    s.n_infinite = raw.n_infinite;
    s.solver_path = path;
    s.condition_estimate = raw.condition_estimate;
    s.eigenvalues.reserve(raw.values.size());
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        const auto lambda = raw.values[i];
        EigenvalueRecord rec;
        rec.lambda = lambda;
        const double denom = na + std::abs(lambda) * nb_norm;
        const double raw_res =
            detail::refined_residual(A, B, lambda, raw.vectors[i], na + std::abs(lambda) * nb_norm);
        rec.residual = denom > 0.0 ? raw_res / denom : raw_res;
        rec.kept = rec.residual <= opts.residual_tol && std::abs(lambda) <= opts.magnitude_cutoff &&
                   std::isfinite(lambda.real()) && std::isfinite(lambda.imag());
        s.eigenvalues.push_back(rec);
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
              [](const EigenvalueRecord& x, const EigenvalueRecord& y) {
                  if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
                  return x.lambda.imag() < y.lambda.imag();
              });
    return s;
}

inline Spectrum solve_pencil(const Pencil& p, const SolveOptions& opts = {}) {
    Spectrum s = solve_pencil(p.A, p.B, opts);
    s.a = p.a;
    s.R = p.R;
    s.grid_n = p.grid.n;
    s.x_max = p.grid.x_max();
    return s;
}

// Two-grid spurious-mode control: an eigenvalue of the coarse run survives
// only if a finer run reproduces it to relative drift <= drift_tol.
inline Spectrum filter_spectrum(const Spectrum& s, const Spectrum& s2, double drift_tol = 1e-4) {
    if (s.a != s2.a || s.R != s2.R || s.x_max != s2.x_max)
        throw std::invalid_argument("filter_spectrum: spectra describe different problems");
    if (s2.grid_n < s.grid_n)
        throw std::invalid_argument("filter_spectrum: second spectrum must be at least as resolved");

    Spectrum out = s;
    out.drift_tol = drift_tol;
    for (auto& rec : out.eigenvalues) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& other : s2.eigenvalues) {
            if (!other.kept) continue;
            best = std::min(best, std::abs(rec.lambda - other.lambda));
        }
        const double drift = best / (1.0 + std::abs(rec.lambda));
        rec.drift = drift;
        rec.kept = rec.kept && drift <= drift_tol;
    }
    return out;
}

}  // namespace orrsom
