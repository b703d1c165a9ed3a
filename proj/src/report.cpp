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

#include "scalesym/report.hpp"

#include <cstdio>
#include <sstream>

#include "scalesym/radical.hpp"

namespace scalesym {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

long long json_int(const Int& v) {
    auto x = to_int64(v);
    if (!x) throw Error("integer too large for the JSON report: " + v.str());
    return *x;
}

Json value_json(const TowerElement& e) {
    Json j;
    auto exact = radical_string(e);
    j["exact"] = exact ? Json(*exact) : Json(nullptr);
    j["decimal"] = fmt_double(e.embed().real());
    return j;
}

Json matrix_json(const IntMatrix2& m) {
    return Json::array({Json::array({json_int(m.a), json_int(m.b)}),
                        Json::array({json_int(m.c), json_int(m.d)})});
}

Json symmetry_report_json(const SymmetryReport& rep) {
    Json j;
    j["kind"] = std::string(kind_name(rep.transform.kind));
    j["k"] = rep.transform.k ? Json(rep.transform.k->str()) : Json(nullptr);
    j["tan_theta"] = value_json(rep.transform.tan_theta);
    j["theta_degrees"] = fmt_double(rep.transform.theta_degrees());
    j["scale"] = value_json(rep.transform.scale);
    if (rep.induced) {
        j["scalar"] = value_json(rep.induced->scalar);
        j["matrix"] = matrix_json(rep.induced->matrix);
        j["matrix_raw"] = matrix_json(rep.induced->raw);
        j["det"] = json_int(rep.det);
        j["det_raw"] = json_int(rep.det_raw);
        j["sublattice_index"] = json_int(rep.sublattice_index);
    } else {
        j["scalar"] = nullptr;
        j["matrix"] = nullptr;
        j["matrix_raw"] = nullptr;
        j["det"] = nullptr;
        j["det_raw"] = nullptr;
        j["sublattice_index"] = nullptr;
    }
    j["verified"] = rep.verified;
    j["notes"] = rep.notes;
    return j;
}

Json grid_report_json(const GridReport& grid, long long radius) {
    Json j;
    j["radius"] = radius;
    j["checked"] = grid.checked;
    j["failures"] = grid.failures;
    j["injective"] = grid.injective;
    return j;
}

Json make_document(const std::string& command, Json inputs, Json results) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    return doc;
}

namespace {

std::string value_line(const TowerElement& e) {
    auto exact = radical_string(e);
    std::string out = exact ? *exact : std::string("(no radical form)");
    out += " = ";
    out += fmt_double(e.embed().real());
    return out;
}

std::string case_title(const SymmetryReport& rep) {
    std::string out(kind_name(rep.transform.kind));
    if (rep.transform.k) out += " family k=" + rep.transform.k->str();
    return out;
}

}  // namespace

std::string verify_table(const SymmetryReport& rep, const GridReport& grid, long long radius) {
    std::ostringstream os;
    os << "case             : " << case_title(rep) << "\n";
    os << "tan(theta)       : " << value_line(rep.transform.tan_theta) << "\n";
    os << "theta            : " << fmt_double(rep.transform.theta_degrees()) << " deg\n";
    os << "S_r              : " << value_line(rep.transform.scale) << "\n";
    if (rep.induced) {
        os << "scalar           : " << value_line(rep.induced->scalar) << "\n";
        os << "matrix           : " << rep.induced->matrix.str() << "\n";
        os << "det              : " << rep.det.str() << " (raw " << rep.det_raw.str() << ")\n";
        os << "sublattice index : " << rep.sublattice_index.str() << "\n";
    } else {
        os << "scalar           : -\n";
        os << "matrix           : - (not lattice-preserving)\n";
    }
    os << "grid check       : radius " << radius << ", " << grid.checked << " points, "
       << grid.failures << " failures, " << (grid.injective ? "injective" : "NOT injective")
       << "\n";
    os << "verified         : " << (rep.verified && grid.failures == 0 && grid.injective
                                        ? "yes"
                                        : "NO")
       << "\n";
    return os.str();
}

std::string family_table(const std::vector<SymmetryReport>& rows) {
    std::ostringstream os;
    os << "   k | tan(theta)            | theta(deg)    | S_r           | scalar"
          "               | matrix                  | det   | index\n";
    for (const auto& rep : rows) {
        auto pad = [](std::string s, std::size_t w) {
            if (s.size() < w) s.append(w - s.size(), ' ');
            return s;
        };
        std::string k = rep.transform.k ? rep.transform.k->str() : "-";
        auto exact_or = [](const TowerElement& e) {
            auto s = radical_string(e);
            return s ? *s : std::string("-");
        };
        os << pad(k, 4) << " | " << pad(exact_or(rep.transform.tan_theta), 21) << " | "
           << pad(fmt_double(rep.transform.theta_degrees()), 13) << " | "
           << pad(fmt_double(rep.transform.scale.embed().real()), 13) << " | "
           << pad(rep.induced ? exact_or(rep.induced->scalar) : "-", 20) << " | "
           << pad(rep.induced ? rep.induced->matrix.str() : "-", 23) << " | "
           << pad(rep.det_raw.str(), 5) << " | " << rep.sublattice_index.str() << "\n";
    }
    return os.str();
}

std::string search_table(const std::vector<SymmetryReport>& findings, long long checked) {
    std::ostringstream os;
    os << "candidates checked: " << checked << ", findings: " << findings.size() << "\n";
    for (const auto& rep : findings) {
        os << "  k=" << (rep.transform.k ? rep.transform.k->str() : "?") << "  scalar "
           << (rep.induced ? value_line(rep.induced->scalar) : "-") << "  matrix "
           << (rep.induced ? rep.induced->matrix.str() : "-") << "  index "
           << rep.sublattice_index.str() << "\n";
    }
    return os.str();
}

std::string check_float_table(const FloatAgreement& fa, double tol, unsigned long long seed,
                              const std::string& case_label) {
    std::ostringstream os;
    os << "case          : " << case_label << "\n";
    os << "samples       : " << fa.samples << "\n";
    os << "seed          : " << seed << "\n";
    os << "tolerance     : " << fmt_double(tol) << "\n";
    os << "max deviation : " << fmt_double(fa.max_deviation) << "\n";
    os << "result        : " << (fa.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace scalesym
