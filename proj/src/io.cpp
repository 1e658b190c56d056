// Copyright 2026 The sdd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdd::io {

using nlohmann::json;

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open file for writing: " + path);
    out << text;
    if (!out)
        throw ParseError("failed writing file: " + path);
}

namespace {

void append_real_array(std::string& out, const std::vector<double>& values)
{
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += format_real(values[i]);
    }
    out += ']';
}

void append_real_matrix(std::string& out, const std::vector<std::vector<double>>& rows)
{
    out += '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            out += ", ";
        append_real_array(out, rows[i]);
    }
    out += ']';
}

std::vector<double> parse_real_array(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError("field '" + field + "' must be an array of reals");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            throw ParseError("field '" + field + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::vector<double>> parse_real_matrix(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError("field '" + field + "' must be an array of arrays");
    std::vector<std::vector<double>> out;
    out.reserve(j.size());
    for (const auto& row : j)
        out.push_back(parse_real_array(row, field));
    return out;
}

Cloud cloud_from_csv(const std::string& text, bool validate_triangle, const Tolerances& tol)
{
    std::vector<std::vector<double>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                row.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw ParseError("csv: cannot parse '" + field + "' as a real");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("csv: no data rows");

    // a square symmetric grid with zero diagonal reads as a distance matrix,
    // anything else as one coordinate point per row
    bool matrix_like = rows.size() == rows[0].size();
    for (const auto& r : rows)
        matrix_like = matrix_like && r.size() == rows.size();
    if (matrix_like) {
        for (std::size_t i = 0; i < rows.size() && matrix_like; ++i) {
            if (std::fabs(rows[i][i]) > tol.abs_eq)
                matrix_like = false;
            for (std::size_t j = 0; j < rows.size(); ++j)
                if (!nearly_equal(rows[i][j], rows[j][i], tol))
                    matrix_like = false;
        }
    }
    try {
        if (matrix_like)
            return Cloud::from_matrix(rows, std::nullopt, validate_triangle, tol);
        return Cloud::from_coordinates(rows, std::nullopt, tol);
    } catch (const ParamError& e) {
        throw ParseError(std::string("csv: ") + e.what());
    }
}

}  // namespace

Cloud cloud_from_json_text(const std::string& text, bool validate_triangle, const Tolerances& tol)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("cloud: missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    std::optional<std::vector<double>> weights;
    if (j.contains("weights"))
        weights = parse_real_array(j["weights"], "weights");

    try {
        if (kind == "coords") {
            if (!j.contains("points"))
                throw ParseError("cloud: kind 'coords' requires field 'points'");
            auto points = parse_real_matrix(j["points"], "points");
            if (j.contains("dim")) {
                const auto dim = j["dim"].get<std::size_t>();
                for (const auto& p : points)
                    if (p.size() != dim)
                        throw ParseError("cloud: point dimension disagrees with 'dim'");
            }
            return Cloud::from_coordinates(points, weights, tol);
        }
        if (kind == "matrix") {
            if (!j.contains("matrix"))
                throw ParseError("cloud: kind 'matrix' requires field 'matrix'");
            return Cloud::from_matrix(parse_real_matrix(j["matrix"], "matrix"), weights,
                                      validate_triangle, tol);
        }
    } catch (const ParamError& e) {
        throw ParseError(std::string("cloud: ") + e.what());
    }
    throw ParseError("cloud: unknown kind '" + kind + "' (expected 'coords' or 'matrix')");
}

Cloud load_cloud(const std::string& path, bool validate_triangle, const Tolerances& tol)
{
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return cloud_from_csv(text, validate_triangle, tol);
    return cloud_from_json_text(text, validate_triangle, tol);
}

Matrix load_matrix_lenient(const std::string& path)
{
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::vector<std::vector<double>> rows;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            std::vector<double> row;
            std::istringstream fields(line);
            std::string field;
            while (std::getline(fields, field, ','))
                row.push_back(std::stod(field));
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            throw ParseError("csv: no data rows");
        const bool square =
            std::all_of(rows.begin(), rows.end(),
                        [&](const auto& r) { return r.size() == rows.size(); });
        if (square)
            return rows;
        return Cloud::from_coordinates(rows).distance_matrix();
    }

    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("cloud: missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "matrix") {
        auto matrix = parse_real_matrix(j.at("matrix"), "matrix");
        const std::size_t m = matrix.size();
        for (const auto& row : matrix)
            if (row.size() != m)
                throw ParseError("matrix: not square");
        return matrix;
    }
    if (kind == "coords") {
        try {
            return Cloud::from_coordinates(parse_real_matrix(j.at("points"), "points"))
                .distance_matrix();
        } catch (const ParamError& e) {
            throw ParseError(std::string("cloud: ") + e.what());
        }
    }
    throw ParseError("cloud: unknown kind '" + kind + "'");
}

std::string cloud_to_json(const Cloud& cloud)
{
    std::string out = "{\"kind\": ";
    if (cloud.kind() == Cloud::Kind::coordinates) {
        out += "\"coords\", \"dim\": " + std::to_string(cloud.dim()) + ", \"points\": ";
        append_real_matrix(out, cloud.points());
    } else {
        out += "\"matrix\", \"matrix\": ";
        append_real_matrix(out, cloud.distance_matrix());
    }
    if (cloud.has_explicit_weights()) {
        out += ", \"weights\": ";
        append_real_array(out, cloud.weights());
    }
    out += "}\n";
    return out;
}

void save_cloud(const std::string& path, const Cloud& cloud)
{
    write_file(path, cloud_to_json(cloud));
}

namespace {

// R stored column-wise internally; files carry it as h rows of m-h entries
std::vector<std::vector<double>> columns_to_rows(const std::vector<std::vector<double>>& cols,
                                                 std::size_t h)
{
    std::vector<std::vector<double>> rows(h, std::vector<double>(cols.size(), 0.0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < h; ++i)
            rows[i][c] = cols[c][i];
    return rows;
}

std::vector<std::vector<double>> rows_to_columns(const std::vector<std::vector<double>>& rows)
{
    if (rows.empty())
        return {};
    std::vector<std::vector<double>> cols(rows[0].size(), std::vector<double>(rows.size(), 0.0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < rows[i].size(); ++c)
            cols[c][i] = rows[i][c];
    return cols;
}

}  // namespace

std::string sdd_to_json(const Sdd& s)
{
    std::string out = "{\"h\": " + std::to_string(s.h) + ", \"k\": " + std::to_string(s.k) +
                      ", \"items\": [";
    for (std::size_t i = 0; i < s.items.size(); ++i) {
        const SddItem& item = s.items[i];
        if (i)
            out += ", ";
        out += "{\"weight_num\": " + std::to_string(item.weight.numerator()) +
               ", \"weight_den\": " + std::to_string(item.weight.denominator()) + ", \"D\": ";
        append_real_array(out, item.rdd.form.dist.entries);
        out += ", \"R\": ";
        append_real_matrix(out, columns_to_rows(item.rdd.form.columns, s.h));
        out += "}";
    }
    out += "]}\n";
    return out;
}

Sdd sdd_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("h") || !j.contains("k") || !j.contains("items"))
        throw ParseError("sdd: fields 'h', 'k', 'items' required");

    Sdd s;
    s.h = j["h"].get<std::size_t>();
    s.k = j["k"].get<long long>();
    long long total = 0;
    for (const auto& ji : j["items"]) {
        SddItem item;
        const long long num = ji.at("weight_num").get<long long>();
        const long long den = ji.at("weight_den").get<long long>();
        item.weight = Weight(num, den);
        item.multiplicity = num * (s.k / den);
        total += item.multiplicity;

        CanonicalRdd c;
        c.form.h = s.h;
        c.form.dist = TriangularDistanceMatrix{s.h, parse_real_array(ji.at("D"), "D")};
        c.form.columns = rows_to_columns(parse_real_matrix(ji.at("R"), "R"));
        c.form.m = s.h + c.form.columns.size();
        c.permutation.resize(s.h);
        for (std::size_t p = 0; p < s.h; ++p)
            c.permutation[p] = p;
        item.rdd = std::move(c);
        s.m = item.rdd.form.m;
        s.items.push_back(std::move(item));
    }
    if (total != s.k)
        throw ParseError("sdd: item weights do not sum to 1");
    return s;
}

std::string pdd_to_json(const Pdd& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (i)
            out += ", ";
        const double w = static_cast<double>(p.weights[i].numerator()) /
                         static_cast<double>(p.weights[i].denominator());
        out += "[" + format_real(w);
        for (double d : p.rows[i])
            out += ", " + format_real(d);
        out += "]";
    }
    out += "]\n";
    return out;
}

std::string reals_to_json(const std::vector<double>& values)
{
    std::string out;
    append_real_array(out, values);
    out += "\n";
    return out;
}

std::vector<double> reals_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    return parse_real_array(j, "values");
}

std::string wsd_to_json(const Wsd& w)
{
    std::string out = "{\"h\": " + std::to_string(w.h) + ", \"k\": " + std::to_string(w.k) +
                      ", \"items\": [";
    for (std::size_t i = 0; i < w.items.size(); ++i) {
        const WsdItem& item = w.items[i];
        if (i)
            out += ", ";
        out += "{\"weight_num\": " + std::to_string(item.weight.numerator()) +
               ", \"weight_den\": " + std::to_string(item.weight.denominator()) +
               ", \"basis_weights\": ";
        append_real_array(out, item.wdd.form.basis_weights);
        out += ", \"D\": ";
        append_real_array(out, item.wdd.form.dist.entries);
        out += ", \"M\": ";
        append_real_matrix(out, columns_to_rows(item.wdd.form.columns, w.h + 1));
        out += "}";
    }
    out += "]}\n";
    return out;
}

std::string comparison_report_json(const std::string& metric, std::size_t h, double value,
                                   double lower_bound_sdm, double elapsed_ms)
{
    return "{\"metric\": \"" + metric + "\", \"h\": " + std::to_string(h) +
           ", \"value\": " + format_real(value) +
           ", \"lower_bound_sdm\": " + format_real(lower_bound_sdm) +
           ", \"elapsed_ms\": " + format_real(elapsed_ms) + "}\n";
}

}  // namespace sdd::io
