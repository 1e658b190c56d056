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

#pragma once

#include <string>

#include "sdd/invariants.hpp"
#include "sdd/mmspace.hpp"

namespace sdd::io {

/// All numeric output uses 17 significant digits, enough to round-trip any
/// 64-bit float and keep emitted files byte-stable across runs.
std::string format_real(double x);

/// Cloud file format:
///   {"kind": "coords", "dim": n, "points": [[...]], "weights": [...]?}
///   {"kind": "matrix", "matrix": [[...]], "weights": [...]?}
/// CSV files hold one point per row, or a square symmetric zero-diagonal grid
/// for matrix clouds (detected automatically).
Cloud load_cloud(const std::string& path, bool validate_triangle = false,
                 const Tolerances& tol = default_tolerances());

/// Reads the distance matrix of a cloud file without enforcing the metric
/// axioms, so `validate` can report violations instead of failing to parse.
/// Coordinate clouds yield their (always metric) Euclidean matrix.
Matrix load_matrix_lenient(const std::string& path);
Cloud cloud_from_json_text(const std::string& text, bool validate_triangle = false,
                           const Tolerances& tol = default_tolerances());
std::string cloud_to_json(const Cloud& cloud);
void save_cloud(const std::string& path, const Cloud& cloud);

/// SDD: {"h": int, "k": int, "items": [{"weight_num", "weight_den",
/// "D": [flat triangle], "R": [[row per basis point]]}]}. Bit-exact
/// round-trip for the rounded canonical values.
std::string sdd_to_json(const Sdd& s);
Sdd sdd_from_json_text(const std::string& text);

/// PDD as a plain nested array, each row [weight, d_1 ... d_{m-1}].
std::string pdd_to_json(const Pdd& p);

/// Plain array of reals (AMD and SDM output).
std::string reals_to_json(const std::vector<double>& values);
std::vector<double> reals_from_json_text(const std::string& text);

/// WSD: like SDD plus per-item "basis_weights" and the (h+1)-row "M" matrix.
std::string wsd_to_json(const Wsd& w);

/// {"metric": "emd"|"lac", "h": int, "value": real, "lower_bound_sdm": real,
/// "elapsed_ms": real}
std::string comparison_report_json(const std::string& metric, std::size_t h, double value,
                                   double lower_bound_sdm, double elapsed_ms);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace sdd::io
