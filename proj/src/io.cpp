/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "qdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace qdist {

namespace {

double finite_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string("expected a number for ") + what);
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string("non-finite value for ") + what);
    }
    return v;
}

std::size_t dim_field(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim")) {
        throw ParseError("payload must be an object with a \"dim\" field");
    }
    const nlohmann::json& d = j.at("dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        throw ParseError("\"dim\" must be a positive integer");
    }
    return d.get<std::size_t>();
}

} // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t dim = dim_field(j);
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw ParseError("matrix payload needs an \"entries\" array");
    }
    const nlohmann::json& rows = j.at("entries");
    if (rows.size() != dim) {
        throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, \"dim\" says " +
                         std::to_string(dim));
    }
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const nlohmann::json& row = rows.at(r);
        if (!row.is_array() || row.size() != dim) {
            throw ParseError("matrix row " + std::to_string(r) + " is not square with dim " +
                             std::to_string(dim));
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const nlohmann::json& cell = row.at(c);
            if (!cell.is_array() || cell.size() != 2) {
                throw ParseError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be an [re, im] pair");
            }
            m.at(r, c) = Complex(finite_number(cell.at(0), "matrix entry real part"),
                                 finite_number(cell.at(1), "matrix entry imaginary part"));
        }
    }
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

KrausMap map_from_json(const nlohmann::json& j) {
    const std::size_t dim = dim_field(j);
    if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
        throw ParseError("map payload needs a nonempty \"kraus\" array");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(j.at("kraus").size());
    for (const nlohmann::json& op : j.at("kraus")) kraus.push_back(matrix_from_json(op));
    return KrausMap(dim, std::move(kraus));
}

nlohmann::json map_to_json(const KrausMap& e) {
    nlohmann::json ops = nlohmann::json::array();
    for (const ComplexMatrix& v : e.kraus()) ops.push_back(matrix_to_json(v));
    return nlohmann::json{{"dim", e.dim()}, {"kraus", std::move(ops)}};
}

std::vector<double> spectrum_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("spectrum payload must be a nonempty array of numbers");
    }
    std::vector<double> spectrum;
    spectrum.reserve(j.size());
    for (const nlohmann::json& v : j) spectrum.push_back(finite_number(v, "spectrum entry"));
    return spectrum;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    try {
        return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

DensityMatrix load_state(const std::string& path) {
    return DensityMatrix(matrix_from_json(load_json(path)));
}

KrausMap load_map(const std::string& path) { return map_from_json(load_json(path)); }

std::vector<double> load_spectrum(const std::string& path) {
    return spectrum_from_json(load_json(path));
}

void save_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("cannot write " + path);
}

namespace {

double parse_param(const std::string& value, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ParamOutOfRange("map spec: value \"" + value + "\" for key \"" + key +
                              "\" is not a number");
    }
    if (used != value.size()) {
        throw ParamOutOfRange("map spec: value \"" + value + "\" for key \"" + key +
                              "\" has trailing characters");
    }
    return v;
}

// key=value pairs separated by commas, keys restricted to `allowed`.
std::map<std::string, double> parse_params(const std::string& args, const std::string& name,
                                           const std::vector<std::string>& allowed) {
    std::map<std::string, double> params;
    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t comma = args.find(',', pos);
        if (comma == std::string::npos) comma = args.size();
        const std::string pair = args.substr(pos, comma - pos);
        const std::size_t eq = pair.find('=');
        if (pair.empty() || eq == std::string::npos || eq == 0) {
            throw ParamOutOfRange("map spec: expected key=value in \"" + pair + "\" for " + name);
        }
        const std::string key = pair.substr(0, eq);
        bool known = false;
        for (const std::string& a : allowed) known = known || key == a;
        if (!known) {
            throw ParamOutOfRange("map spec: unknown key \"" + key + "\" for " + name);
        }
        if (params.count(key)) {
            throw ParamOutOfRange("map spec: duplicate key \"" + key + "\" for " + name);
        }
        params[key] = parse_param(pair.substr(eq + 1), key);
        pos = comma + 1;
    }
    return params;
}

double require_param(const std::map<std::string, double>& params, const std::string& key,
                     const std::string& name) {
    const auto it = params.find(key);
    if (it == params.end()) {
        throw ParamOutOfRange("map spec: " + name + " requires key \"" + key + "\"");
    }
    return it->second;
}

} // namespace

KrausMap parse_map_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        throw ParamOutOfRange("map spec \"" + spec + "\" needs the form name:args");
    }
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (name == "file") {
        if (args.empty()) throw ParamOutOfRange("map spec: file: needs a path");
        return load_map(args);
    }
    if (name == "depolarizing") {
        const auto params = parse_params(args, name, {"w", "dim"});
        const double w = require_param(params, "w", name);
        std::size_t dim = 2;
        if (params.count("dim")) {
            const double d = params.at("dim");
            if (d < 1.0 || d != std::floor(d)) {
                throw ParamOutOfRange("map spec: dim must be a positive integer");
            }
            dim = static_cast<std::size_t>(d);
        }
        return depolarizing(dim, w);
    }
    if (name == "amp") {
        const auto params = parse_params(args, name, {"gamma"});
        return amplitude_damping(require_param(params, "gamma", name));
    }
    if (name == "amp2") {
        const auto params = parse_params(args, name, {"ga", "gb"});
        return tensor_map(amplitude_damping(require_param(params, "ga", name)),
                          amplitude_damping(require_param(params, "gb", name)));
    }
    throw ParamOutOfRange("map spec: unknown map name \"" + name + "\"");
}

ComplexMatrix parse_basis_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) != 0 || spec.size() <= 5) {
        throw ParamOutOfRange("basis spec \"" + spec + "\" needs the form file:path.json");
    }
    return load_matrix(spec.substr(5));
}

std::string json_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

JsonWriter& JsonWriter::num(const std::string& key, double v) {
    fields_.emplace_back(key, json_num(v));
    return *this;
}

JsonWriter& JsonWriter::integer(const std::string& key, long long v) {
    fields_.emplace_back(key, std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::uinteger(const std::string& key, std::uint64_t v) {
    fields_.emplace_back(key, std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::str(const std::string& key, const std::string& v) {
    fields_.emplace_back(key, "\"" + v + "\"");
    return *this;
}

JsonWriter& JsonWriter::boolean(const std::string& key, bool v) {
    fields_.emplace_back(key, v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::raw(const std::string& key, const std::string& v) {
    fields_.emplace_back(key, v);
    return *this;
}

std::string JsonWriter::render() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        out += "  \"" + fields_[i].first + "\": " + fields_[i].second;
        if (i + 1 < fields_.size()) out += ",";
        out += "\n";
    }
    out += "}\n";
    return out;
}

std::string json_num_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += json_num(values[i]);
    }
    return out + "]";
}

std::string scan_csv(const ScanGrid& grid) {
    std::string out = "x,y,z,d_in,d_out,C,W\n";
    for (const WitnessReport& p : grid.rows) {
        out += csv_num(p.x) + "," + csv_num(p.y) + "," + csv_num(p.z) + "," + csv_num(p.d_in) +
               "," + csv_num(p.d_out) + "," + csv_num(p.c_const) + "," + csv_num(p.w) + "\n";
    }
    return out;
}

std::string domain_csv(const DomainCloud& cloud, std::uint64_t seed) {
    std::string out = "# seed=" + std::to_string(seed) + "\n";
    out += "x,y,z,active_face\n";
    for (const DomainPoint& p : cloud.points) {
        out += csv_num(p.x) + "," + csv_num(p.y) + "," + csv_num(p.z) + "," + p.face + "\n";
    }
    return out;
}

std::string curve_csv(const std::vector<CurvePoint>& curve) {
    std::string out = "s,d_rho,d_pi,two_d_rho\n";
    for (const CurvePoint& p : curve) {
        out += csv_num(p.s) + "," + csv_num(p.d_rho) + "," + csv_num(p.d_pi) + "," +
               csv_num(p.bound) + "\n";
    }
    return out;
}

} // namespace qdist
