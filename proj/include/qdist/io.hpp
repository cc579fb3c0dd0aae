/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// JSON schemas and fixed-precision emitters.
//
// Matrix JSON: {"dim": n, "entries": [[[re, im], ...], ...]} — outer array
// rows, inner array columns, each entry a 2-array of finite doubles; payloads
// must be square.  Map JSON: {"dim": n, "kraus": [<matrix JSON>, ...]}.
// Spectra are plain JSON arrays of doubles.
//
// Report output is pinned at 12 significant digits for JSON and 6 for CSV so
// identical runs produce byte-identical files.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "qdist/analysis.hpp"
#include "qdist/channels.hpp"
#include "qdist/states.hpp"

namespace qdist {

// --- schema conversion ----------------------------------------------------------

ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

KrausMap map_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const KrausMap& e);

std::vector<double> spectrum_from_json(const nlohmann::json& j);

// --- file access -------------------------------------------------------------------

// IoError if the file cannot be read; ParseError if it is not valid JSON.
nlohmann::json load_json(const std::string& path);

ComplexMatrix load_matrix(const std::string& path);
// Runs the density-matrix validation gate on the parsed payload.
DensityMatrix load_state(const std::string& path);
KrausMap load_map(const std::string& path);
std::vector<double> load_spectrum(const std::string& path);

void save_text(const std::string& text, const std::string& path);

// --- named-map mini-syntax -----------------------------------------------------------
//
// "depolarizing:w=0.3,dim=2", "amp:gamma=0.5", "amp2:ga=0.5,gb=0.25" (the
// damping pair as a tensor product), or "file:path.json".  Keys are validated
// strictly; unknown names or keys raise ParamOutOfRange.
KrausMap parse_map_spec(const std::string& spec);

// "file:unitary.json" -> the unitary matrix for basis rotations.
ComplexMatrix parse_basis_spec(const std::string& spec);

// --- fixed-precision emission -------------------------------------------------------

// 12 significant digits (JSON reports).
std::string json_num(double v);
// 6 significant digits (CSV).
std::string csv_num(double v);

// Order-preserving JSON object emitter with pinned number formatting.
class JsonWriter {
public:
    JsonWriter& num(const std::string& key, double v);
    JsonWriter& integer(const std::string& key, long long v);
    JsonWriter& uinteger(const std::string& key, std::uint64_t v);
    JsonWriter& str(const std::string& key, const std::string& v);
    JsonWriter& boolean(const std::string& key, bool v);
    // Pre-rendered JSON value (arrays, nested objects).
    JsonWriter& raw(const std::string& key, const std::string& v);

    std::string render() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

// [a, b, ...] with 12-significant-digit entries.
std::string json_num_array(const std::vector<double>& values);

// header x,y,z,d_in,d_out,C,W; one row per feasible scan point.
std::string scan_csv(const ScanGrid& grid);
// header x,y,z,active_face after a "# seed=N" echo line.
std::string domain_csv(const DomainCloud& cloud, std::uint64_t seed);
// header s,d_rho,d_pi,two_d_rho.
std::string curve_csv(const std::vector<CurvePoint>& curve);

} // namespace qdist
