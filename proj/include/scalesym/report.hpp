// Copyright 2026 The scalesym Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "scalesym/symmetry.hpp"

namespace scalesym {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// %.12g - deterministic, at least 10 significant digits retained.
std::string fmt_double(double v);

/// {"exact": "<radical string>", "decimal": "<%.12g>"}; exact is null when
/// the element has no flat radical form.
Json value_json(const TowerElement& e);

Json matrix_json(const IntMatrix2& m);

Json symmetry_report_json(const SymmetryReport& rep);

Json grid_report_json(const GridReport& grid, long long radius);

/// The report envelope every command emits in JSON mode.
Json make_document(const std::string& command, Json inputs, Json results);

std::string verify_table(const SymmetryReport& rep, const GridReport& grid, long long radius);
std::string family_table(const std::vector<SymmetryReport>& rows);
std::string search_table(const std::vector<SymmetryReport>& findings, long long checked);
std::string check_float_table(const FloatAgreement& fa, double tol, unsigned long long seed,
                              const std::string& case_label);

/// Checked narrowing for JSON serialization.
long long json_int(const Int& v);

}  // namespace scalesym
