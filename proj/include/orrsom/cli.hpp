#pragma once

// Batch front-end: wiring profile -> pencil -> spectrum -> enclosure
// verification with reproducible configuration echo in every output file.
// Identical configurations produce byte-identical outputs.

#include <atomic>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orrsom/eigensolver.hpp"
#include "orrsom/enclosure.hpp"
#include "orrsom/io.hpp"
#include "orrsom/pencil.hpp"
#include "orrsom/profile.hpp"
#include "orrsom/verify.hpp"

namespace orrsom {

struct RunConfig {
    std::string profile = "blasius";  // blasius | constant:<c> | file:<path>
    double a = 0.179;
    double R = 580.0;
    int N = 128;
    GridScheme scheme = GridScheme::TruncatedChebyshev;
    double map_param = 100.0;  // X_max (truncated) or L (algebraic)
    double residual_tol = 1e-8;
    double drift_tol = 1e-4;
    double slack = 1e-6;
    RegionVariant variant = RegionVariant::Thm33;
    std::string out_dir = "out";
    std::string format = "json";  // json | csv (csv adds sidecar tables)
    int jobs = 1;
    int profile_points = 501;
    std::optional<std::string> spectrum_in;  // verify from a file instead of solving
    std::vector<double> a_values;            // sweep only
    std::vector<double> R_values;

    Json to_json() const {
        Json j;
        j["profile"] = profile;
        j["a"] = a;
        j["R"] = R;
        j["N"] = N;
        j["scheme"] = to_string(scheme);
        j["xmax"] = map_param;
        j["residual_tol"] = residual_tol;
        j["drift_tol"] = drift_tol;
        j["slack"] = slack;
        j["variant"] = to_string(variant);
        j["out"] = out_dir;
        j["format"] = format;
        j["jobs"] = jobs;
        j["profile_points"] = profile_points;
        if (spectrum_in) j["spectrum_in"] = *spectrum_in;
        if (!a_values.empty()) j["a_values"] = a_values;
        if (!R_values.empty()) j["R_values"] = R_values;
        return j;
    }
};

namespace detail {

inline FlowProfile resolve_profile(const RunConfig& cfg) {
    if (cfg.profile == "blasius") return make_blasius_profile(solve_blasius());
    if (cfg.profile.rfind("constant:", 0) == 0)
        return make_constant_profile(std::stod(cfg.profile.substr(9)));
    if (cfg.profile.rfind("file:", 0) == 0) return read_tabulated_profile(cfg.profile.substr(5));
    throw std::invalid_argument("unknown profile spec: " + cfg.profile);
}

inline std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

inline std::vector<std::string> resolution_warnings(const RunConfig& cfg) {
    std::vector<std::string> w;
    if (cfg.N < 16)
        w.push_back("N=" + std::to_string(cfg.N) +
                    " is below the recommended minimum of 16; results may be unusable");
    return w;
}

inline Spectrum compute_filtered_spectrum(const RunConfig& cfg, const FlowProfile& profile) {
    SolveOptions opts;
    opts.residual_tol = cfg.residual_tol;
    const Grid g1 = build_grid(cfg.scheme, cfg.N, cfg.map_param);
    const Grid g2 = build_grid(cfg.scheme, 2 * cfg.N, cfg.map_param);
    const Spectrum s1 = solve_pencil(assemble_pencil(profile, cfg.a, cfg.R, g1), opts);
    const Spectrum s2 = solve_pencil(assemble_pencil(profile, cfg.a, cfg.R, g2), opts);
    return filter_spectrum(s1, s2, cfg.drift_tol);
}

inline Json header(const RunConfig& cfg) {
    Json j;
    j["schema"] = 1;
    j["config"] = cfg.to_json();
    return j;
}

// Shared by verify and sweep: the full per-parameter-point pipeline result.
inline Json verification_record(const RunConfig& cfg, const FlowProfile& profile, double a,
                                double R) {
    const ProfileBounds bounds = profile_bounds(profile);
    const EnclosureRegion reg = region(cfg.variant, a, R, bounds);
    const EssentialRay ray = essential_ray(a, R, profile.asymptotic_value());

    Spectrum sp;
    if (cfg.spectrum_in) {
        sp = spectrum_from_json(Json::parse(read_text_file(*cfg.spectrum_in)));
    } else {
        RunConfig point = cfg;
        point.a = a;
        point.R = R;
        sp = compute_filtered_spectrum(point, profile);
    }
    const VerifyReport rep = verify_spectrum(sp, reg, ray, cfg.slack);

    Json j;
    j["a"] = a;
    j["R"] = R;
    j["variant"] = to_string(cfg.variant);
    Json enc;
    enc["r"] = reg.radius();
    enc["strip_re_min"] = reg.strip_re_min();
    enc["strip_im_min"] = reg.strip_im_min();
    enc["strip_im_max"] = reg.strip_im_max();
    enc["beta3_bound"] = bounds.dv_abs_max / (2.0 * a);
    enc["ray_base_re"] = ray.base().real();
    enc["ray_base_im"] = ray.base().imag();
    j["enclosure"] = enc;
    j["bounds"] = bounds_to_json(bounds);
    j["spectrum"] = spectrum_to_json(sp);
    Json verdicts = Json::array();
    for (const auto& v : rep.verdicts) {
        Json rec;
        rec["re"] = v.lambda.real();
        rec["im"] = v.lambda.imag();
        rec["inside"] = v.inside;
        rec["ray_distance"] = v.ray_distance;
        rec["below_ray"] = v.below_ray;
        verdicts.push_back(rec);
    }
    j["verdicts"] = verdicts;
    Json summary;
    summary["n_kept"] = rep.n_kept;
    summary["n_inside"] = rep.n_inside;
    summary["n_below_ray"] = rep.n_below_ray;
    summary["all_inside"] = rep.all_inside;
    summary["max_ray_distance"] = rep.max_ray_distance;
    summary["slack"] = rep.slack;
    j["summary"] = summary;
    return j;
}

}  // namespace detail

// profile.csv (uniform table on [0, xmax]) + bounds.json
inline int run_profile(const RunConfig& cfg) {
    if (cfg.profile_points < 2) throw std::invalid_argument("profile: need at least 2 points");
    const FlowProfile profile = detail::resolve_profile(cfg);
    std::vector<ProfileTableRow> rows;
    rows.reserve(cfg.profile_points);
    const double h = cfg.map_param / (cfg.profile_points - 1);
    for (int i = 0; i < cfg.profile_points; ++i) {
        const double x = i == cfg.profile_points - 1 ? cfg.map_param : i * h;
        const auto s = profile.eval(x);
        rows.push_back({x, s.v, s.dv, s.d2v});
    }
    std::string csv = "# config: " + cfg.to_json().dump() + "\n" + profile_table_csv(rows);
    write_text_file(detail::out_path(cfg, "profile.csv"), csv);

    Json side;
    side["c"] = profile.asymptotic_value();
    write_text_file(sidecar_path(detail::out_path(cfg, "profile.csv")), side.dump(2) + "\n");

    Json j = detail::header(cfg);
    j["kind"] = to_string(profile.kind());
    j["bounds"] = bounds_to_json(profile_bounds(profile));
    write_text_file(detail::out_path(cfg, "bounds.json"), j.dump(2) + "\n");
    return 0;
}

// spectrum.json from a two-grid filtered solve
inline int run_spectrum(const RunConfig& cfg) {
    const auto warnings = detail::resolution_warnings(cfg);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    const FlowProfile profile = detail::resolve_profile(cfg);
    const Spectrum sp = detail::compute_filtered_spectrum(cfg, profile);

    Json j = detail::header(cfg);
    if (!warnings.empty()) j["warnings"] = warnings;
    j.update(spectrum_to_json(sp));
    write_text_file(detail::out_path(cfg, "spectrum.json"), j.dump(2) + "\n");

    if (cfg.format == "csv") {
        std::string csv = "# config: " + cfg.to_json().dump() + "\nre,im,residual,kept,drift\n";
        for (const auto& e : sp.eigenvalues) {
            csv += fmt_double(e.lambda.real()) + "," + fmt_double(e.lambda.imag()) + "," +
                   fmt_double(e.residual) + "," + (e.kept ? "1" : "0") + "," +
                   (e.drift ? fmt_double(*e.drift) : "") + "\n";
        }
        write_text_file(detail::out_path(cfg, "spectrum.csv"), csv);
    }
    return 0;
}

// ray.csv + region_<variant>.csv + box.json
inline int run_enclosure(const RunConfig& cfg) {
    const FlowProfile profile = detail::resolve_profile(cfg);
    const ProfileBounds bounds = profile_bounds(profile);
    const EnclosureRegion reg = region(cfg.variant, cfg.a, cfg.R, bounds);
    const EssentialRay ray = essential_ray(cfg.a, cfg.R, profile.asymptotic_value());
    const double re_cap = default_re_cap(reg);

    const std::string echo = "config: " + cfg.to_json().dump();
    std::vector<Complex> ray_pts{ray.base(), {re_cap, ray.base().imag()}};
    write_text_file(detail::out_path(cfg, "ray.csv"), polyline_csv(ray_pts, echo));

    const auto boundary = region_boundary(reg, re_cap);
    write_text_file(detail::out_path(cfg, std::string("region_") + to_string(cfg.variant) + ".csv"),
                    polyline_csv(boundary, echo));

    Json j = detail::header(cfg);
    j["bounds"] = bounds_to_json(bounds);
    j["r"] = reg.radius();
    Json strip;
    strip["re_min"] = reg.strip_re_min();
    strip["im_min"] = reg.strip_im_min();
    strip["im_max"] = reg.strip_im_max();
    j["strip"] = strip;
    const BoxBounds box = box_bounds(RegionVariant::Cor32Box, cfg.a, cfg.R, bounds);
    Json bj;
    bj["re_min"] = box.re_min;
    bj["im_min"] = box.im_min;
    bj["im_max"] = box.im_max;
    j["cor32_box"] = bj;
    if (bounds.d2v_max <= 0.0) {
        const BoxBounds ibox = box_bounds(RegionVariant::Cor32BoxImproved, cfg.a, cfg.R, bounds);
        Json ij;
        ij["re_min"] = ibox.re_min;
        ij["im_min"] = ibox.im_min;
        ij["im_max"] = ibox.im_max;
        j["cor32_box_improved"] = ij;
    }
    j["beta3_bound"] = bounds.dv_abs_max / (2.0 * cfg.a);
    write_text_file(detail::out_path(cfg, "box.json"), j.dump(2) + "\n");
    return 0;
}

// verify.json; exit 0 iff every kept eigenvalue lies inside the region
inline int run_verify(const RunConfig& cfg) {
    const auto warnings = detail::resolution_warnings(cfg);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    const FlowProfile profile = detail::resolve_profile(cfg);
    Json record = detail::verification_record(cfg, profile, cfg.a, cfg.R);
    Json j = detail::header(cfg);
    if (!warnings.empty()) j["warnings"] = warnings;
    j.update(record);
    write_text_file(detail::out_path(cfg, "verify.json"), j.dump(2) + "\n");
    return j["summary"]["all_inside"].get<bool>() ? 0 : 1;
}

// sweep.json over the cartesian product of a_values x R_values
inline int run_sweep(const RunConfig& cfg) {
    const std::vector<double> as = cfg.a_values.empty() ? std::vector<double>{cfg.a} : cfg.a_values;
    const std::vector<double> Rs = cfg.R_values.empty() ? std::vector<double>{cfg.R} : cfg.R_values;
    if (as.empty() || Rs.empty()) throw std::invalid_argument("sweep: parameter lists are empty");
    const FlowProfile profile = detail::resolve_profile(cfg);

    struct Point {
        double a, R;
    };
    std::vector<Point> points;
    for (double av : as)
        for (double rv : Rs) points.push_back({av, rv});

    std::vector<Json> records(points.size());
    std::atomic<std::size_t> next{0};
    const int jobs = std::max(1, cfg.jobs);
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= points.size()) return;
            try {
                records[idx] = detail::verification_record(cfg, profile, points[idx].a,
                                                           points[idx].R);
            } catch (const std::exception& e) {
                Json err;
                err["a"] = points[idx].a;
                err["R"] = points[idx].R;
                err["error"] = e.what();
                records[idx] = err;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Json j = detail::header(cfg);
    Json pts = Json::array();
    for (auto& r : records) pts.push_back(std::move(r));
    j["points"] = pts;
    write_text_file(detail::out_path(cfg, "sweep.json"), j.dump(2) + "\n");
    return 0;
}

}  // namespace orrsom
