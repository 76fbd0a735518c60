#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "orrsom/eigensolver.hpp"
#include "orrsom/enclosure.hpp"
#include "orrsom/rayleigh.hpp"
#include "orrsom/verify.hpp"
#include "support.hpp"

using namespace orrsom;

namespace {

ProfileBounds blasius_bounds() {
    static const ProfileBounds b = profile_bounds(make_blasius_profile(solve_blasius()));
    return b;
}

}  // namespace

TEST_CASE("essential ray at the reference parameters") {
    const EssentialRay ray = essential_ray(0.179, 580.0, 1.0);
    CHECK(ray.base().real() == Catch::Approx(0.032041).margin(1e-12));
    CHECK(ray.base().imag() == Catch::Approx(103.82).margin(1e-12));
    CHECK(ray.distance(ray.base() + 5.0) == 0.0);

    const EssentialRay flat = essential_ray(0.3, 100.0, 0.0);
    CHECK(flat.base().imag() == 0.0);
    CHECK(flat.distance(Complex(0.09 + 2.0, 0.0)) == 0.0);

    CHECK_THROWS(essential_ray(-1.0, 580.0, 1.0));
}

TEST_CASE("ray base shifts linearly with the asymptotic value") {
    const double a = 0.41, R = 733.0, c = 0.37;
    const Complex d = essential_ray(a, R, c).base() - essential_ray(a, R, 0.0).base();
    CHECK(d.real() == 0.0);
    CHECK(d.imag() == a * R * c);
}

TEST_CASE("region constants at the reference parameters") {
    const ProfileBounds b = blasius_bounds();
    const EnclosureRegion reg = region(RegionVariant::Thm31, 0.179, 580.0, b);
    CHECK(reg.radius() == Catch::Approx(96.30).margin(5e-2));
    CHECK(reg.strip_re_min() == Catch::Approx(0.032041).margin(1e-12));
    CHECK(reg.strip_im_min() == 0.0);
    CHECK(reg.strip_im_max() == Catch::Approx(103.82).margin(1e-12));
}

TEST_CASE("zero slope bound collapses the region to the strip") {
    const ProfileBounds b{0.5, 0.5, 0.0, 0.0, 0.0, 0.5};
    const EnclosureRegion reg = region(RegionVariant::Thm31, 0.3, 200.0, b);
    CHECK(reg.radius() == 0.0);
    CHECK(reg.contains({0.09, 0.3 * 200.0 * 0.5}));
    CHECK_FALSE(reg.contains({0.09 - 1e-12, 0.3 * 200.0 * 0.5}));
    CHECK_FALSE(reg.contains({1.0, 0.3 * 200.0 * 0.5 + 1e-9}));
}

TEST_CASE("curvature-sign hypothesis is enforced") {
    ProfileBounds b{0.0, 1.0, 0.4, -0.1, 0.05, 1.0};  // d2v_max > 0
    CHECK_THROWS(region(RegionVariant::Thm33, 0.2, 500.0, b));
    CHECK_THROWS(box_bounds(RegionVariant::Cor32BoxImproved, 0.2, 500.0, b));
    CHECK_NOTHROW(region(RegionVariant::Thm31, 0.2, 500.0, b));
}

TEST_CASE("membership at hand-picked points") {
    const ProfileBounds b = blasius_bounds();
    const double a = 0.179, R = 580.0;
    const EnclosureRegion full = region(RegionVariant::Thm31, a, R, b);
    const EnclosureRegion sharp = region(RegionVariant::Thm33, a, R, b);
    const double r = full.radius();

    // corner of the strip belongs to both variants
    const Complex corner_top(a * a, full.strip_im_max());
    CHECK(full.contains(corner_top));
    CHECK(sharp.contains(corner_top));

    // 1 + 110i: inside the disc-grown region, above the half-disc-grown one
    CHECK(full.contains({1.0, 110.0}));
    CHECK_FALSE(sharp.contains({1.0, 110.0}));

    // bottom-left box corner: exactly r*sqrt(2) from the strip corner
    const Complex far_corner(a * a - r, full.strip_im_min() - r);
    CHECK_FALSE(sharp.contains(far_corner));
    CHECK_FALSE(full.contains(far_corner));
}

TEST_CASE("separate bounds extracted from the regions") {
    const ProfileBounds b = blasius_bounds();
    const double a = 0.179, R = 580.0;
    const BoxBounds box = box_bounds(RegionVariant::Cor32Box, a, R, b);
    CHECK(box.re_min == Catch::Approx(-96.26).margin(5e-2));
    CHECK(box.im_min == Catch::Approx(-96.30).margin(5e-2));
    CHECK(box.im_max == Catch::Approx(200.12).margin(5e-2));

    const BoxBounds ibox = box_bounds(RegionVariant::Cor32BoxImproved, a, R, b);
    CHECK(ibox.im_max == Catch::Approx(103.82).margin(1e-9));

    const ProfileBounds cb{1.0, 1.0, 0.0, 0.0, 0.0, 1.0};
    const BoxBounds degenerate = box_bounds(RegionVariant::Cor32Box, a, R, cb);
    CHECK(degenerate.re_min == a * a);
    CHECK(degenerate.im_min == a * R);
    CHECK(degenerate.im_max == a * R);
}

TEST_CASE("inclusion chain on sampled points") {
    const ProfileBounds b = blasius_bounds();
    const double a = 0.179, R = 580.0;
    const EnclosureRegion full = region(RegionVariant::Thm31, a, R, b);
    const EnclosureRegion sharp = region(RegionVariant::Thm33, a, R, b);
    const EnclosureRegion box = region(RegionVariant::Cor32Box, a, R, b);
    const EnclosureRegion ibox = region(RegionVariant::Cor32BoxImproved, a, R, b);
    const double r = full.radius();

    auto rng = testsupport::make_rng(31);
    std::uniform_real_distribution<double> ure(a * a - 2.5 * r, a * a + 3.5 * r);
    std::uniform_real_distribution<double> uim(-2.5 * r, full.strip_im_max() + 2.5 * r);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const Complex z(ure(rng), uim(rng));
        if (sharp.contains(z) && !full.contains(z)) ++violations;
        if (full.contains(z) && !box.contains(z)) ++violations;
        if (sharp.contains(z) && !ibox.contains(z)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("closed-form membership agrees with the sampling oracle") {
    const ProfileBounds b = blasius_bounds();
    const double a = 0.179, R = 580.0;
    const EnclosureRegion full = region(RegionVariant::Thm31, a, R, b);
    const EnclosureRegion sharp = region(RegionVariant::Thm33, a, R, b);
    const double r = full.radius();

    auto rng = testsupport::make_rng(32);
    std::uniform_real_distribution<double> ure(a * a - 2.0 * r, a * a + 3.0 * r);
    std::uniform_real_distribution<double> uim(full.strip_im_min() - 2.0 * r,
                                               full.strip_im_max() + 2.0 * r);
    int disagreements = 0, compared = 0;
    for (int i = 0; i < 300; ++i) {
        const Complex z(ure(rng), uim(rng));
        for (const auto* reg : {&full, &sharp}) {
            const double margin = reg->margin(z);
            if (std::abs(margin) <= 1e-9) continue;  // boundary band
            ++compared;
            const double d = testsupport::minkowski_distance_oracle(
                z, a * a, reg->strip_im_min(), reg->strip_im_max(), r,
                reg->variant() == RegionVariant::Thm33);
            const bool oracle_inside = d <= 1e-9;
            if (oracle_inside != reg->contains(z)) ++disagreements;
        }
    }
    CHECK(compared > 500);
    CHECK(disagreements == 0);
}

TEST_CASE("boundary polyline") {
    const double a = 0.179, R = 580.0;
    SECTION("degenerate radius gives the clipped strip rectangle") {
        const ProfileBounds cb{1.0, 1.0, 0.0, 0.0, 0.0, 1.0};
        const EnclosureRegion reg = region(RegionVariant::Thm31, a, R, cb);
        const auto pts = region_boundary(reg, 50.0);
        REQUIRE(pts.size() == 5);
        CHECK(pts[0] == Complex(50.0, a * R));
        CHECK(pts[1] == Complex(a * a, a * R));
        CHECK(pts[2] == Complex(a * a, a * R));
        CHECK(pts[3] == Complex(50.0, a * R));
        CHECK(pts[4] == pts[0]);
    }
    SECTION("arc points sit at distance r from the strip corner") {
        const ProfileBounds b = blasius_bounds();
        const EnclosureRegion reg = region(RegionVariant::Thm31, a, R, b);
        const auto pts = region_boundary(reg, default_re_cap(reg));
        const Complex corner(reg.strip_re_min(), reg.strip_im_min());
        double best = 1e300;
        for (const auto& p : pts) best = std::min(best, std::abs(std::abs(p - corner) - reg.radius()));
        CHECK(best <= 1e-12 * reg.radius());
    }
    SECTION("points are on the boundary: inside, but not after an outward nudge") {
        const ProfileBounds b = blasius_bounds();
        for (const auto variant : {RegionVariant::Thm31, RegionVariant::Thm33,
                                   RegionVariant::Cor32Box, RegionVariant::Cor32BoxImproved}) {
            const EnclosureRegion reg = region(variant, a, R, b);
            const double re_cap = default_re_cap(reg);
            const auto pts = region_boundary(reg, re_cap);
            // deep interior reference point; valid for any of these convex regions
            const Complex q(0.5 * (reg.strip_re_min() + re_cap),
                            0.5 * (reg.strip_im_min() - reg.radius() + reg.strip_im_max()));
            REQUIRE(reg.contains(q));
            for (const auto& p : pts) {
                CHECK(reg.contains(p, 1e-9 * (1.0 + std::abs(p))));
                if (p.real() >= re_cap - 1e-9 * (1.0 + std::abs(p))) continue;  // clip line
                const Complex outward = (p - q) / std::abs(p - q);
                const double eps = 1e-6 * (1.0 + std::abs(p));
                CHECK_FALSE(reg.contains(p + eps * outward));
            }
        }
    }
}

TEST_CASE("beta decomposition for the constant profile") {
    const double a = 0.179, R = 580.0;
    const Grid g = build_grid(GridScheme::TruncatedChebyshev, 256, 100.0);
    const auto d = beta_decomposition(g, make_constant_profile(1.0), a, R, trial_x2_exp());
    CHECK(d.beta2 == Catch::Approx(1.0).margin(1e-10));
    CHECK(d.beta3 == Complex(0.0, 0.0));
    CHECK(d.beta1 >= a * a);
    CHECK(std::abs(d.lambda_direct - d.lambda_assembled()) <=
          1e-8 * (1.0 + std::abs(d.lambda_direct)));
}

TEST_CASE("two quadrature routes to the same quotient agree against a refined grid") {
    const double a = 0.179, R = 580.0;
    const FlowProfile prof = make_blasius_profile(solve_blasius());
    const Grid g = build_grid(GridScheme::TruncatedChebyshev, 256, 100.0);
    const Grid g2 = build_grid(GridScheme::TruncatedChebyshev, 512, 100.0);
    const auto d = beta_decomposition(g, prof, a, R, trial_x2_exp());
    const auto dref = beta_decomposition(g2, prof, a, R, trial_x2_exp());
    CHECK(std::abs(d.lambda_direct - d.lambda_assembled()) <=
          1e-8 * std::abs(d.lambda_direct));
    CHECK(std::abs(d.lambda_direct - dref.lambda_direct) <= 1e-9 * std::abs(d.lambda_direct));
    CHECK(d.imag_defect <= 1e-10);
}

TEST_CASE("beta bounds over the randomized trial family") {
    const double a = 0.179, R = 580.0;
    const Grid g = build_grid(GridScheme::TruncatedChebyshev, 256, 100.0);
    const FlowProfile blas = make_blasius_profile(solve_blasius());
    const FlowProfile cst = make_constant_profile(1.0);
    const ProfileBounds bb = blasius_bounds();
    const ProfileBounds cb = profile_bounds(cst);

    auto rng = testsupport::make_rng(33);
    std::uniform_real_distribution<double> ua(0.5, 2.0), ubeta(0.4, 1.5), ugamma(-0.8, 0.8);
    for (int i = 0; i < 50; ++i) {
        const TrialFunction t = trial_family(ua(rng), ubeta(rng), ugamma(rng));
        for (const auto* pair : {&bb, &cb}) {
            const FlowProfile& prof = (pair == &bb) ? blas : cst;
            const auto d = beta_decomposition(g, prof, a, R, t);
            CHECK(d.beta1 >= a * a - 1e-10);
            CHECK(d.beta2 >= pair->v_min - 1e-8);
            CHECK(d.beta2 <= pair->v_max + 1e-8);
            CHECK(std::abs(d.beta3) <= pair->dv_abs_max / (2.0 * a) + 1e-8);
            CHECK(std::abs(d.lambda_direct - d.lambda_assembled()) <=
                  1e-8 * (1.0 + std::abs(d.lambda_direct)));
            if (pair->d2v_max <= 0.0) {
                CHECK(d.beta3.real() >= -1e-8);
                CHECK(d.beta3.real() <= -pair->d2v_min / (2.0 * a * a) + 1e-8);
            }
        }
    }
}

TEST_CASE("inadmissible trial is rejected") {
    const Grid g = build_grid(GridScheme::TruncatedChebyshev, 64, 50.0);
    TrialFunction zero{"zero", [](double) { return std::array<double, 5>{}; }};
    CHECK_THROWS(beta_decomposition(g, make_constant_profile(1.0), 0.5, 10.0, zero));
}

TEST_CASE("verification report for the constant profile stays on the ray") {
    const double a = 0.179, R = 580.0;
    const FlowProfile prof = make_constant_profile(1.0);
    const Grid g1 = build_grid(GridScheme::TruncatedChebyshev, 128, 100.0);
    const Grid g2 = build_grid(GridScheme::TruncatedChebyshev, 256, 100.0);
    const Spectrum f = filter_spectrum(solve_pencil(assemble_pencil(prof, a, R, g1)),
                                       solve_pencil(assemble_pencil(prof, a, R, g2)));
    const ProfileBounds b = profile_bounds(prof);
    const EnclosureRegion reg = region(RegionVariant::Thm31, a, R, b);
    const EssentialRay ray = essential_ray(a, R, 1.0);
    const VerifyReport rep = verify_spectrum(f, reg, ray, 1e-6);
    CHECK(rep.n_kept > 10);
    CHECK(rep.all_inside);
    CHECK(rep.n_inside == rep.n_kept);
    for (const auto& v : rep.verdicts)
        CHECK(v.ray_distance <= 1e-6 * (1.0 + std::abs(v.lambda)));
}

TEST_CASE("empty kept set verifies vacuously") {
    Spectrum s;
    s.a = 0.2;
    s.R = 100.0;
    const ProfileBounds b{0.0, 1.0, 0.3, -0.1, 0.0, 1.0};
    const VerifyReport rep =
        verify_spectrum(s, region(RegionVariant::Thm33, 0.2, 100.0, b),
                        essential_ray(0.2, 100.0, 1.0), 1e-6);
    CHECK(rep.n_kept == 0);
    CHECK(rep.n_inside == 0);
    CHECK(rep.all_inside);
}
