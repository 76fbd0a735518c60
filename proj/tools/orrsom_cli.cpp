// Command-line front-end. Subcommands:
//   profile    emit profile.csv and bounds.json
//   spectrum   emit spectrum.json (two-grid filtered eigenvalues)
//   enclosure  emit ray.csv, region_<variant>.csv, box.json
//   verify     full pipeline; exit 0 iff all kept eigenvalues are enclosed
//   sweep      verify over lists of a and R values; emit sweep.json

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orrsom/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of wall-bounded shear-flow stability"};
    app.require_subcommand(1);

    orrsom::RunConfig cfg;
    std::string scheme = "truncated";
    std::string variant = "thm33";
    std::string spectrum_in;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--profile", cfg.profile, "blasius | constant:<c> | file:<path>");
        sub->add_option("--a", cfg.a, "wave number (> 0)");
        sub->add_option("--R", cfg.R, "Reynolds number (> 0)");
        sub->add_option("--N", cfg.N, "collocation nodes");
        sub->add_option("--xmax", cfg.map_param, "domain truncation length (or map scale)");
        sub->add_option("--scheme", scheme, "truncated | algebraic");
        sub->add_option("--variant", variant,
                        "thm31 | thm33 | cor32-box | cor32-box-improved");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--format", cfg.format, "json | csv");
        sub->add_option("--jobs", cfg.jobs, "worker threads for sweep");
        sub->add_option("--slack", cfg.slack, "containment slack, scaled by 1+|lambda|");
        sub->add_option("--residual-tol", cfg.residual_tol, "eigenvalue residual threshold");
        sub->add_option("--drift-tol", cfg.drift_tol, "two-grid drift threshold");
        sub->add_option("--points", cfg.profile_points, "rows in profile.csv");
    };

    auto* p_profile = app.add_subcommand("profile", "emit the flow profile and its bounds");
    add_common(p_profile);
    auto* p_spectrum = app.add_subcommand("spectrum", "solve the eigenvalue problem");
    add_common(p_spectrum);
    auto* p_enclosure = app.add_subcommand("enclosure", "emit enclosure geometry");
    add_common(p_enclosure);
    auto* p_verify = app.add_subcommand("verify", "check spectrum containment");
    add_common(p_verify);
    p_verify->add_option("--spectrum-in", spectrum_in, "verify a stored spectrum.json");
    auto* p_sweep = app.add_subcommand("sweep", "verify over parameter lists");
    add_common(p_sweep);
    p_sweep->add_option("--a-list", cfg.a_values, "wave numbers")->delimiter(',');
    p_sweep->add_option("--R-list", cfg.R_values, "Reynolds numbers")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.scheme = orrsom::grid_scheme_from_string(scheme);
        cfg.variant = orrsom::region_variant_from_string(variant);
        if (!spectrum_in.empty()) cfg.spectrum_in = spectrum_in;
        if (!(cfg.a > 0.0 && cfg.R > 0.0 && cfg.N > 0 && cfg.map_param > 0.0 &&
              cfg.slack >= 0.0 && cfg.jobs >= 1))
            throw std::invalid_argument("numeric parameters must be positive");

        if (p_profile->parsed()) return orrsom::run_profile(cfg);
        if (p_spectrum->parsed()) return orrsom::run_spectrum(cfg);
        if (p_enclosure->parsed()) return orrsom::run_enclosure(cfg);
        if (p_verify->parsed()) return orrsom::run_verify(cfg);
        if (p_sweep->parsed()) return orrsom::run_sweep(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
