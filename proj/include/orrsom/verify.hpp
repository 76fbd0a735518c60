#pragma once

// Checks a computed spectrum against the analytical containment results:
// membership in an enclosure region, distance to the essential-spectrum ray,
// and the "below the ray" property Im(lambda) <= a R c.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "orrsom/enclosure.hpp"
#include "orrsom/spectrum.hpp"

namespace orrsom {

struct EigenvalueVerdict {
    Complex lambda;
    bool inside = false;
    double ray_distance = 0.0;
    bool below_ray = false;
};

struct VerifyReport {
    std::vector<EigenvalueVerdict> verdicts;  // kept eigenvalues only
    int n_kept = 0;
    int n_inside = 0;
    int n_below_ray = 0;
    bool all_inside = true;  // vacuously true for an empty kept set
    double max_ray_distance = 0.0;
    double slack = 0.0;
};

inline VerifyReport verify_spectrum(const Spectrum& s, const EnclosureRegion& reg,
                                    const EssentialRay& ray, double slack = 1e-6) {
    VerifyReport rep;
    rep.slack = slack;
    for (const auto& rec : s.eigenvalues) {
        if (!rec.kept) continue;
        const double scale = slack * (1.0 + std::abs(rec.lambda));
        EigenvalueVerdict v;
        v.lambda = rec.lambda;
        v.inside = reg.contains(rec.lambda, scale);
        v.ray_distance = ray.distance(rec.lambda);
        v.below_ray = rec.lambda.imag() <= ray.a * ray.R * ray.c + scale;
        rep.verdicts.push_back(v);
        ++rep.n_kept;
        if (v.inside) ++rep.n_inside;
        if (v.below_ray) ++rep.n_below_ray;
        rep.all_inside = rep.all_inside && v.inside;
        rep.max_ray_distance = std::max(rep.max_ray_distance, v.ray_distance);
    }
    return rep;
}

}  // namespace orrsom
