#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace orrsom {

struct EigenvalueRecord {
    std::complex<double> lambda;
    // residual ||(A - lambda B) v|| / ||v||, scaled by (||A||_F + |lambda| ||B||_F)
    double residual = 0.0;
    bool kept = false;
    std::optional<double> drift;  // |lambda - lambda'| / (1 + |lambda|) vs finer run
};

struct Spectrum {
    std::vector<EigenvalueRecord> eigenvalues;  // sorted by Re ascending
    int matrix_size = 0;
    int grid_n = 0;       // collocation resolution N (matrix_size if no grid)
    double a = 0.0, R = 0.0, x_max = 0.0;
    double residual_tol = 0.0, magnitude_cutoff = 0.0;
    std::optional<double> drift_tol;
    int n_infinite = 0;   // eigenvalues from zero B-rows, excluded
    std::string solver_path;  // "reduction" or "qz"
    double condition_estimate = 0.0;  // of the reduced B factor (reduction path)

    std::vector<std::complex<double>> kept() const {
        std::vector<std::complex<double>> out;
        for (const auto& e : eigenvalues)
            if (e.kept) out.push_back(e.lambda);
        return out;
    }
};

}  // namespace orrsom
