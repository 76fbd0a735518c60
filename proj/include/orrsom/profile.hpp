#pragma once

// Flow profiles V on [0, infinity) with first and second derivatives, and
// the five global bounds (V_min, V_max, |V'|_max, V''_min, V''_max) that the
// eigenvalue enclosures are built from.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orrsom/blasius.hpp"

namespace orrsom {

enum class ProfileKind { Constant, Blasius, Tabulated, Analytic };

inline const char* to_string(ProfileKind k) {
    switch (k) {
        case ProfileKind::Constant: return "constant";
        case ProfileKind::Blasius: return "blasius";
        case ProfileKind::Tabulated: return "tabulated";
        case ProfileKind::Analytic: return "analytic";
    }
    return "?";
}

struct ProfileSample {
    double v = 0.0, dv = 0.0, d2v = 0.0;
};

struct ProfileTableRow {
    double x = 0.0, v = 0.0, dv = 0.0, d2v = 0.0;
};

class FlowProfile {
  public:
    using Evaluator = std::function<ProfileSample(double)>;

    FlowProfile() = default;
    FlowProfile(ProfileKind kind, double asymptotic_value, Evaluator eval)
        : kind_(kind), c_(asymptotic_value), eval_(std::move(eval)) {}

    ProfileKind kind() const { return kind_; }
    double asymptotic_value() const { return c_; }

    ProfileSample eval(double x) const {
        if (std::isinf(x)) return {c_, 0.0, 0.0};
        if (!(x >= 0.0)) throw std::invalid_argument("profile: eval requires x >= 0");
        return eval_(x);
    }

  private:
    ProfileKind kind_ = ProfileKind::Constant;
    double c_ = 0.0;
    Evaluator eval_ = [](double) { return ProfileSample{}; };
};

inline FlowProfile make_constant_profile(double c) {
    return FlowProfile(ProfileKind::Constant, c,
                       [c](double) { return ProfileSample{c, 0.0, 0.0}; });
}

inline FlowProfile make_analytic_profile(FlowProfile::Evaluator f, double c) {
    return FlowProfile(ProfileKind::Analytic, c, std::move(f));
}

// Piecewise interpolation of a sampled profile: cubic Hermite on V (slopes
// from the dV column), linear on d2V; (c, 0, 0) beyond the last sample.
inline FlowProfile make_tabulated_profile(std::vector<ProfileTableRow> rows, double c) {
    if (rows.empty()) throw std::invalid_argument("tabulated profile: empty table");
    if (rows.front().x != 0.0)
        throw std::invalid_argument("tabulated profile: abscissae must start at 0");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i].x > rows[i - 1].x))
            throw std::invalid_argument("tabulated profile: abscissae must be strictly increasing");

    auto table = std::make_shared<std::vector<ProfileTableRow>>(std::move(rows));
    auto eval = [table, c](double x) -> ProfileSample {
        const auto& t = *table;
        if (x >= t.back().x) {
            if (x == t.back().x) return {t.back().v, t.back().dv, t.back().d2v};
            return {c, 0.0, 0.0};
        }
        auto it = std::upper_bound(t.begin(), t.end(), x,
                                   [](double q, const ProfileTableRow& r) { return q < r.x; });
        const std::size_t k = static_cast<std::size_t>(it - t.begin()) - 1;
        const double h = t[k + 1].x - t[k].x;
        const double s = (x - t[k].x) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        const double v = h00 * t[k].v + h10 * h * t[k].dv + h01 * t[k + 1].v + h11 * h * t[k + 1].dv;
        // dV from the derivative of the Hermite basis
        const double g00 = 6 * s * (s - 1) / h;
        const double g10 = (3 * s - 1) * (s - 1);
        const double g01 = -g00;
        const double g11 = s * (3 * s - 2);
        const double dv = g00 * t[k].v + g10 * t[k].dv + g01 * t[k + 1].v + g11 * t[k + 1].dv;
        const double d2v = (1 - s) * t[k].d2v + s * t[k + 1].d2v;
        return {v, dv, d2v};
    };
    return FlowProfile(ProfileKind::Tabulated, c, std::move(eval));
}

inline FlowProfile make_blasius_profile(const BlasiusSolution& sol) {
    auto shared = std::make_shared<BlasiusSolution>(sol);
    return FlowProfile(ProfileKind::Blasius, 1.0, [shared](double x) -> ProfileSample {
        const auto st = shared->eval(x);
        // the exact solution has V in [0, 1], V' >= 0, V'' <= 0; interpolation
        // round-off must not leak outside these bounds
        return {std::clamp(st.fp, 0.0, 1.0), std::max(st.fpp, 0.0), std::min(st.fppp, 0.0)};
    });
}

struct ProfileBounds {
    double v_min = 0.0, v_max = 0.0;
    double dv_abs_max = 0.0;
    double d2v_min = 0.0, d2v_max = 0.0;
    double c = 0.0;
};

// Global bounds from a dense scan of [0, infinity) (the scan grid is mapped
// so it covers the far field and the asymptotic limit). Sampled extrema are
// widened outward by `margin`; the widening is heuristic, not rigorous.
// Structural knowledge short-circuits the scan where available:
//   - constant profiles have exact bounds (c, c, 0, 0, 0);
//   - the wall-bounded similarity profile has V in [0, 1] with V'' <= 0 by
//     construction, so those three bounds are pinned rather than widened
//     (widening V''_max past zero would needlessly void the curvature-sign
//     hypothesis of the sharpened enclosure).
inline ProfileBounds profile_bounds(const FlowProfile& p, int n_scan = 2048,
                                    double margin = 1e-6) {
    if (n_scan < 100) throw std::invalid_argument("profile_bounds: n_scan must be >= 100");
    const double c = p.asymptotic_value();
    if (p.kind() == ProfileKind::Constant) return {c, c, 0.0, 0.0, 0.0, c};

    double v_min = c, v_max = c, dv_max = 0.0, d2v_min = 0.0, d2v_max = 0.0;
    const double scale = 5.0;  // median scan point at x = 5
    for (int i = 0; i < n_scan; ++i) {
        const double theta = static_cast<double>(i) / n_scan;
        const double x = scale * theta / (1.0 - theta);
        const auto s = p.eval(x);
        v_min = std::min(v_min, s.v);
        v_max = std::max(v_max, s.v);
        dv_max = std::max(dv_max, std::abs(s.dv));
        d2v_min = std::min(d2v_min, s.d2v);
        d2v_max = std::max(d2v_max, s.d2v);
    }

    ProfileBounds b;
    b.c = c;
    b.dv_abs_max = dv_max + margin;
    b.d2v_min = d2v_min - margin;
    if (p.kind() == ProfileKind::Blasius) {
        b.v_min = 0.0;
        b.v_max = 1.0;
        b.d2v_max = 0.0;
    } else {
        b.v_min = v_min - margin;
        b.v_max = v_max + margin;
        // keep a sampled sign certificate intact
        b.d2v_max = d2v_max <= 0.0 ? std::min(d2v_max + margin, 0.0) : d2v_max + margin;
    }
    return b;
}

}  // namespace orrsom
