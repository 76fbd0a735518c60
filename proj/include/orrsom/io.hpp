#pragma once

// File formats: CSV tables (profiles, polylines) and versioned JSON
// documents. All numeric output uses shortest-round-trip formatting so
// identical inputs produce byte-identical files.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orrsom/profile.hpp"
#include "orrsom/spectrum.hpp"

namespace orrsom {

using Json = nlohmann::ordered_json;

inline std::string fmt_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("fmt_double: conversion failed");
    return {buf, end};
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// ---- profile tables: CSV `x,V,dV,d2V` + JSON sidecar {"c": ...} ----

inline std::string profile_table_csv(const std::vector<ProfileTableRow>& rows) {
    std::string out = "x,V,dV,d2V\n";
    for (const auto& r : rows) {
        out += fmt_double(r.x);
        out += ',';
        out += fmt_double(r.v);
        out += ',';
        out += fmt_double(r.dv);
        out += ',';
        out += fmt_double(r.d2v);
        out += '\n';
    }
    return out;
}

inline std::string sidecar_path(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    const auto slash = csv_path.find_last_of("/\\");
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return csv_path.substr(0, dot) + ".json";
    return csv_path + ".json";
}

inline void write_profile_table(const std::string& csv_path,
                                const std::vector<ProfileTableRow>& rows, double c) {
    write_text_file(csv_path, profile_table_csv(rows));
    Json side;
    side["c"] = c;
    write_text_file(sidecar_path(csv_path), side.dump(2) + "\n");
}

inline std::vector<ProfileTableRow> parse_profile_csv(const std::string& text) {
    std::vector<ProfileTableRow> rows;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first non-comment line is the header
            continue;
        }
        ProfileTableRow r;
        std::istringstream ls(line);
        std::string cell;
        double* fields[4] = {&r.x, &r.v, &r.dv, &r.d2v};
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ls, cell, ',')) throw std::runtime_error("profile csv: short row");
            *fields[i] = std::stod(cell);
        }
        rows.push_back(r);
    }
    if (rows.empty()) throw std::runtime_error("profile csv: no data rows");
    return rows;
}

// Reads the table and its sidecar; if the sidecar is missing, the last V
// sample is taken as the asymptotic value.
inline FlowProfile read_tabulated_profile(const std::string& csv_path) {
    auto rows = parse_profile_csv(read_text_file(csv_path));
    double c = rows.back().v;
    std::ifstream side(sidecar_path(csv_path));
    if (side) {
        Json j = Json::parse(side);
        if (j.contains("c")) c = j["c"].get<double>();
    }
    return make_tabulated_profile(std::move(rows), c);
}

// ---- polylines: CSV `re,im` ----

inline std::string polyline_csv(const std::vector<std::complex<double>>& pts,
                                const std::string& comment = {}) {
    std::string out;
    if (!comment.empty()) out = "# " + comment + "\n";
    out += "re,im\n";
    for (const auto& p : pts) {
        out += fmt_double(p.real());
        out += ',';
        out += fmt_double(p.imag());
        out += '\n';
    }
    return out;
}

// ---- bounds and spectra as JSON ----

inline Json bounds_to_json(const ProfileBounds& b) {
    Json j;
    j["v_min"] = b.v_min;
    j["v_max"] = b.v_max;
    j["dv_abs_max"] = b.dv_abs_max;
    j["d2v_min"] = b.d2v_min;
    j["d2v_max"] = b.d2v_max;
    j["c"] = b.c;
    return j;
}

inline ProfileBounds bounds_from_json(const Json& j) {
    ProfileBounds b;
    b.v_min = j.at("v_min").get<double>();
    b.v_max = j.at("v_max").get<double>();
    b.dv_abs_max = j.at("dv_abs_max").get<double>();
    b.d2v_min = j.at("d2v_min").get<double>();
    b.d2v_max = j.at("d2v_max").get<double>();
    b.c = j.at("c").get<double>();
    return b;
}

inline Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["a"] = s.a;
    j["R"] = s.R;
    j["N"] = s.grid_n;
    j["X_max"] = s.x_max;
    Json evs = Json::array();
    for (const auto& e : s.eigenvalues) {
        Json rec;
        rec["re"] = e.lambda.real();
        rec["im"] = e.lambda.imag();
        rec["residual"] = e.residual;
        rec["kept"] = e.kept;
        if (e.drift) rec["drift"] = *e.drift;
        evs.push_back(rec);
    }
    j["eigenvalues"] = evs;
    j["n_infinite"] = s.n_infinite;
    j["solver_path"] = s.solver_path;
    j["condition_estimate"] = s.condition_estimate;
    j["residual_tol"] = s.residual_tol;
    j["magnitude_cutoff"] = s.magnitude_cutoff;
    if (s.drift_tol) j["drift_tol"] = *s.drift_tol;
    return j;
}

inline Spectrum spectrum_from_json(const Json& j) {
    Spectrum s;
    s.a = j.at("a").get<double>();
    s.R = j.at("R").get<double>();
    s.grid_n = j.at("N").get<int>();
    s.x_max = j.at("X_max").get<double>();
    for (const auto& rec : j.at("eigenvalues")) {
        EigenvalueRecord e;
        e.lambda = {rec.at("re").get<double>(), rec.at("im").get<double>()};
        e.residual = rec.value("residual", 0.0);
        e.kept = rec.value("kept", true);
        if (rec.contains("drift")) e.drift = rec["drift"].get<double>();
        s.eigenvalues.push_back(e);
    }
    if (j.contains("n_infinite")) s.n_infinite = j["n_infinite"].get<int>();
    if (j.contains("solver_path")) s.solver_path = j["solver_path"].get<std::string>();
    return s;
}

}  // namespace orrsom
