#pragma once

// Exact geometry for the spectral enclosures.
//
// Essential-spectrum ray: { a^2 + i a R c + mu : mu >= 0 }, horizontal,
// pointing right, for profiles with V -> c and V'' -> 0.
//
// Enclosure regions built from the profile bounds:
//   strip    S  = [a^2, inf) x i a R [V_min, V_max]
//   radius   r  = (R/2) |V'|_max
//   full     S + r D   (D the closed unit disc): every eigenvalue is here
//   sharp    S + r D-  (D- the lower half disc, valid when V'' <= 0)
//   box      separate Re/Im bounds extracted from the full region; the
//            improved box caps Im at a R V_max when V'' <= 0.
//
// Membership is evaluated in closed form. The half-disc sum is the strip
// grown left and down by r, with a sharp top-left corner (the half disc
// contains +-r on the real axis but nothing above it) and a quarter-disc
// rounding at the bottom-left corner.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "orrsom/profile.hpp"

namespace orrsom {

using Complex = std::complex<double>;

struct EssentialRay {
    double a = 0.0, R = 0.0, c = 0.0;

    Complex base() const { return {a * a, a * R * c}; }

    double distance(Complex z) const {
        return std::hypot(std::max(a * a - z.real(), 0.0), z.imag() - a * R * c);
    }
};

inline EssentialRay essential_ray(double a, double R, double c) {
    if (!(a > 0.0 && R > 0.0)) throw std::invalid_argument("essential_ray: need a > 0 and R > 0");
    return {a, R, c};
}

enum class RegionVariant { Thm31, Thm33, Cor32Box, Cor32BoxImproved };

inline const char* to_string(RegionVariant v) {
    switch (v) {
        case RegionVariant::Thm31: return "thm31";
        case RegionVariant::Thm33: return "thm33";
        case RegionVariant::Cor32Box: return "cor32-box";
        case RegionVariant::Cor32BoxImproved: return "cor32-box-improved";
    }
    return "?";
}

inline RegionVariant region_variant_from_string(const std::string& s) {
    if (s == "thm31") return RegionVariant::Thm31;
    if (s == "thm33") return RegionVariant::Thm33;
    if (s == "cor32-box") return RegionVariant::Cor32Box;
    if (s == "cor32-box-improved") return RegionVariant::Cor32BoxImproved;
    throw std::invalid_argument("unknown region variant: " + s);
}

struct BoxBounds {
    double re_min = 0.0, im_min = 0.0, im_max = 0.0;
};

class EnclosureRegion {
  public:
    EnclosureRegion(RegionVariant variant, double a, double R, ProfileBounds bounds)
        : variant_(variant), a_(a), R_(R), bounds_(bounds) {}

    RegionVariant variant() const { return variant_; }
    double a() const { return a_; }
    double R() const { return R_; }
    const ProfileBounds& bounds() const { return bounds_; }

    double radius() const { return 0.5 * R_ * bounds_.dv_abs_max; }
    double strip_re_min() const { return a_ * a_; }
    double strip_im_min() const { return a_ * R_ * bounds_.v_min; }
    double strip_im_max() const { return a_ * R_ * bounds_.v_max; }

    // Euclidean distance to the semi-infinite strip S (clamped coordinates).
    double strip_distance(Complex z) const {
        const double dx = std::max(strip_re_min() - z.real(), 0.0);
        const double dy =
            std::max({strip_im_min() - z.imag(), z.imag() - strip_im_max(), 0.0});
        return std::hypot(dx, dy);
    }

    // Membership, optionally relaxed outward by tol (absolute).
    bool contains(Complex z, double tol = 0.0) const {
        const double r = radius();
        switch (variant_) {
            case RegionVariant::Thm31:
                return strip_distance(z) <= r + tol;
            case RegionVariant::Thm33: {
                if (z.real() < strip_re_min() - r - tol) return false;
                if (z.imag() > strip_im_max() + tol) return false;
                if (z.imag() < strip_im_min() - r - tol) return false;
                if (z.real() < strip_re_min() && z.imag() < strip_im_min()) {
                    const Complex corner(strip_re_min(), strip_im_min());
                    return std::abs(z - corner) <= r + tol;
                }
                return true;
            }
            case RegionVariant::Cor32Box:
                return z.real() >= strip_re_min() - r - tol &&
                       z.imag() >= strip_im_min() - r - tol &&
                       z.imag() <= strip_im_max() + r + tol;
            case RegionVariant::Cor32BoxImproved:
                return z.real() >= strip_re_min() - r - tol &&
                       z.imag() >= strip_im_min() - r - tol && z.imag() <= strip_im_max() + tol;
        }
        return false;
    }

    // Signed slack: positive inside, negative outside; for the convex
    // variants a lower bound on the distance to the boundary.
    double margin(Complex z) const {
        const double r = radius();
        switch (variant_) {
            case RegionVariant::Thm31:
                return r - strip_distance(z);
            case RegionVariant::Thm33: {
                double m = std::min({z.real() - (strip_re_min() - r),
                                     strip_im_max() - z.imag(),
                                     z.imag() - (strip_im_min() - r)});
                if (z.real() < strip_re_min() && z.imag() < strip_im_min()) {
                    const Complex corner(strip_re_min(), strip_im_min());
                    m = std::min(m, r - std::abs(z - corner));
                }
                return m;
            }
            case RegionVariant::Cor32Box:
                return std::min({z.real() - (strip_re_min() - r),
                                 z.imag() - (strip_im_min() - r),
                                 (strip_im_max() + r) - z.imag()});
            case RegionVariant::Cor32BoxImproved:
                return std::min({z.real() - (strip_re_min() - r),
                                 z.imag() - (strip_im_min() - r), strip_im_max() - z.imag()});
        }
        return 0.0;
    }

  private:
    RegionVariant variant_;
    double a_, R_;
    ProfileBounds bounds_;
};

inline EnclosureRegion region(RegionVariant variant, double a, double R,
                              const ProfileBounds& b) {
    if (!(a > 0.0 && R > 0.0)) throw std::invalid_argument("region: need a > 0 and R > 0");
    if ((variant == RegionVariant::Thm33 || variant == RegionVariant::Cor32BoxImproved) &&
        b.d2v_max > 0.0)
        throw std::invalid_argument(
            "region: curvature-sign hypothesis violated (V'' must be <= 0 for this variant)");
    return {variant, a, R, b};
}

inline bool contains(const EnclosureRegion& reg, Complex z, double tol = 0.0) {
    return reg.contains(z, tol);
}

inline BoxBounds box_bounds(RegionVariant variant, double a, double R, const ProfileBounds& b) {
    if (variant != RegionVariant::Cor32Box && variant != RegionVariant::Cor32BoxImproved)
        throw std::invalid_argument("box_bounds: box variants only");
    const EnclosureRegion reg = region(variant, a, R, b);
    const double r = reg.radius();
    BoxBounds box;
    box.re_min = reg.strip_re_min() - r;
    box.im_min = reg.strip_im_min() - r;
    box.im_max = variant == RegionVariant::Cor32Box ? reg.strip_im_max() + r : reg.strip_im_max();
    return box;
}

// Ordered boundary polyline of the region clipped to Re <= re_cap, suitable
// for plotting; closed (last point repeats the first), traversed
// counterclockwise starting at the top-right corner. Circular arcs are
// sampled with n_pts points each.
inline std::vector<Complex> region_boundary(const EnclosureRegion& reg, double re_cap,
                                            int n_pts = 64) {
    if (!(re_cap > reg.strip_re_min()))
        throw std::invalid_argument("region_boundary: re_cap must exceed the strip tip");
    const double r = reg.radius();
    const double a2 = reg.strip_re_min();
    const double lo = reg.strip_im_min(), hi = reg.strip_im_max();
    const double pi = 3.14159265358979323846;

    std::vector<Complex> pts;
    auto arc = [&](Complex center, double th0, double th1, bool skip_first = false) {
        for (int k = skip_first ? 1 : 0; k <= n_pts; ++k) {
            const double th = th0 + (th1 - th0) * k / n_pts;
            pts.emplace_back(center.real() + r * std::cos(th), center.imag() + r * std::sin(th));
        }
    };

    switch (reg.variant()) {
        case RegionVariant::Thm31:
            pts.emplace_back(re_cap, hi + r);
            if (r > 0.0) {
                arc({a2, hi}, 0.5 * pi, pi);
                arc({a2, lo}, pi, 1.5 * pi);
            } else {
                pts.emplace_back(a2, hi);
                pts.emplace_back(a2, lo);
            }
            pts.emplace_back(re_cap, lo - r);
            break;
        case RegionVariant::Thm33:
            pts.emplace_back(re_cap, hi);
            pts.emplace_back(a2 - r, hi);
            if (r > 0.0) {
                pts.emplace_back(a2 - r, lo);
                arc({a2, lo}, pi, 1.5 * pi, /*skip_first=*/true);
            } else {
                pts.emplace_back(a2, lo);
            }
            pts.emplace_back(re_cap, lo - r);
            break;
        case RegionVariant::Cor32Box:
        case RegionVariant::Cor32BoxImproved: {
            const BoxBounds box = box_bounds(reg.variant(), reg.a(), reg.R(), reg.bounds());
            pts.emplace_back(re_cap, box.im_max);
            pts.emplace_back(box.re_min, box.im_max);
            pts.emplace_back(box.re_min, box.im_min);
            pts.emplace_back(re_cap, box.im_min);
            break;
        }
    }
    pts.push_back(pts.front());
    return pts;
}

inline double default_re_cap(const EnclosureRegion& reg) {
    return reg.strip_re_min() + 3.0 * reg.radius() + 10.0;
}

}  // namespace orrsom
