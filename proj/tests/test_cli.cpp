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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scalesym/cli.hpp"
#include "scalesym/symmetry.hpp"

using namespace scalesym;
using Json = nlohmann::json;

namespace {

RunResult run(std::initializer_list<std::string> args) {
    return run_command(std::vector<std::string>(args));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string source_path(const std::string& rel) {
    return std::string(SCALESYM_SOURCE_DIR) + "/" + rel;
}

long long count_occurrences(const std::string& text, const std::string& needle) {
    long long count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

// Minimal JSON-Schema checker covering the subset the shipped schema uses:
// type (string or list), required, properties, additionalProperties (bool),
// items, enum, anyOf, $ref into #/definitions.
class SchemaValidator {
  public:
    explicit SchemaValidator(Json root) : root_(std::move(root)) {}

    std::string check(const Json& schema, const Json& value, const std::string& path) const {
        if (schema.contains("$ref")) return check(resolve(schema["$ref"]), value, path);

        if (schema.contains("anyOf")) {
            for (const auto& alt : schema["anyOf"])
                if (check(alt, value, path).empty()) return {};
            return path + ": no anyOf alternative matched";
        }
        if (schema.contains("type")) {
            const auto& t = schema["type"];
            bool ok = false;
            if (t.is_string())
                ok = type_matches(t.get<std::string>(), value);
            else
                for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
            if (!ok) return path + ": type mismatch";
        }
        if (schema.contains("enum")) {
            bool ok = false;
            for (const auto& e : schema["enum"]) ok = ok || e == value;
            if (!ok) return path + ": not in enum";
        }
        if (value.is_object()) {
            if (schema.contains("required"))
                for (const auto& key : schema["required"])
                    if (!value.contains(key.get<std::string>()))
                        return path + ": missing required '" + key.get<std::string>() + "'";
            const Json props =
                schema.contains("properties") ? schema["properties"] : Json::object();
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (props.contains(it.key())) {
                    auto err = check(props[it.key()], it.value(), path + "." + it.key());
                    if (!err.empty()) return err;
                } else if (schema.value("additionalProperties", true) == false) {
                    return path + ": unexpected property '" + it.key() + "'";
                }
            }
        }
        if (value.is_array() && schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                auto err =
                    check(schema["items"], value[i], path + "[" + std::to_string(i) + "]");
                if (!err.empty()) return err;
            }
        }
        return {};
    }

    const Json& resolve(const std::string& ref) const {
        REQUIRE(ref.rfind("#/", 0) == 0);
        const Json* node = &root_;
        std::istringstream parts(ref.substr(2));
        std::string token;
        while (std::getline(parts, token, '/')) node = &(*node)[token];
        return *node;
    }

    const Json& root() const { return root_; }

  private:
    Json root_;

    static bool type_matches(const std::string& t, const Json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }
};

/// Validates the envelope plus the per-command inputs/results definitions.
void validate_document(const Json& doc) {
    static const SchemaValidator validator(Json::parse(read_file(source_path(
        "docs/report.schema.json"))));
    CHECK(validator.check(validator.root(), doc, "$") == "");
    std::string cmd = doc["command"].get<std::string>();
    for (auto& ch : cmd)
        if (ch == '-') ch = '_';
    CHECK(validator.check(validator.resolve("#/definitions/" + cmd + "_inputs"), doc["inputs"],
                          "$.inputs") == "");
    CHECK(validator.check(validator.resolve("#/definitions/" + cmd + "_results"),
                          doc["results"], "$.results") == "");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("verify square --k 2") {
    auto res = run({"verify", "square", "--k", "2", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.out);
    validate_document(doc);

    const Json& rep = doc["results"]["report"];
    CHECK(rep["matrix"] == Json::parse("[[1,-1],[-1,3]]"));
    CHECK(rep["scalar"]["exact"] == "(2-sqrt(2))/2");
    CHECK(std::abs(std::stod(rep["scalar"]["decimal"].get<std::string>()) - 0.2928932188) <
          1e-10);
    CHECK(rep["scale"]["exact"] == "3-2*sqrt(2)");
    CHECK(std::abs(std::stod(rep["scale"]["decimal"].get<std::string>()) - 0.1715728753) <
          1e-10);
    CHECK(rep["verified"] == true);
    CHECK(doc["results"]["grid"]["radius"] == 50);
    CHECK(doc["results"]["grid"]["checked"] == 10201);
    CHECK(doc["results"]["grid"]["failures"] == 0);
    CHECK(doc["results"]["grid"]["injective"] == true);
}

TEST_CASE("verify triangular") {
    auto res = run({"verify", "triangular", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.out);
    validate_document(doc);

    const Json& rep = doc["results"]["report"];
    CHECK(rep["matrix"] == Json::parse("[[0,1],[-1,4]]"));
    CHECK(rep["scalar"]["exact"] == "2-sqrt(3)");
    CHECK(std::abs(std::stod(rep["scalar"]["decimal"].get<std::string>()) - 0.2679491924) <
          1e-10);
    CHECK(rep["det"] == 1);
    CHECK(rep["sublattice_index"] == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"verify", "square", "--k", "0"}).exit_code == 2);
    CHECK(run({"verify", "square"}).exit_code == 2);
    CHECK(run({"verify", "triangular", "--k", "3"}).exit_code == 2);
    CHECK(run({"verify", "hexagonal"}).exit_code == 2);
    CHECK(run({"render", "square", "--k", "2", "--radius", "0"}).exit_code == 2);
    CHECK(run({"family", "--k-max", "0"}).exit_code == 2);
    CHECK(run({"search", "--lattice", "square"}).exit_code == 2);
    CHECK(run({"search", "--lattice", "square", "--k-int", "1..5", "--k-sqrt3", "1..2"})
              .exit_code == 2);
    CHECK(run({"check-float", "--lattice", "square", "--k", "3", "--tol", "-1"}).exit_code ==
          2);
    CHECK(run({"points", "square", "--k", "2"}).exit_code == 2);  // radius required
    CHECK(run({}).exit_code == 2);
}

TEST_CASE("family table rows") {
    auto res = run({"family", "--k-max", "3", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.out);
    validate_document(doc);

    const Json& rows = doc["results"]["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(std::abs(std::stod(rows[0]["theta_degrees"].get<std::string>()) - 31.7175) < 0.05);
    CHECK(std::abs(std::stod(rows[0]["scale"]["decimal"].get<std::string>()) - 0.3819660113) <
          1e-10);
    CHECK(rows[0]["matrix"] == Json::parse("[[2,-1],[-1,3]]"));
    CHECK(rows[0]["det_raw"] == 5);
    CHECK(std::abs(std::stod(rows[1]["theta_degrees"].get<std::string>()) - 22.5) < 1e-9);
    CHECK(rows[2]["matrix"] == Json::parse("[[2,-3],[-3,11]]"));

    // table mode prints one line per k plus a header
    auto table = run({"family", "--k-max", "3"});
    CHECK(table.exit_code == 0);
    CHECK(count_occurrences(table.out, "\n") == 4);
}

TEST_CASE("search commands") {
    auto neg = run({"search", "--lattice", "triangular", "--k-int", "1..20", "--format",
                    "json"});
    CHECK(neg.exit_code == 0);  // empty result is a result
    const Json negdoc = Json::parse(neg.out);
    validate_document(negdoc);
    CHECK(negdoc["results"]["findings"].empty());
    CHECK(negdoc["results"]["candidates_checked"] == 20);

    auto pos = run({"search", "--lattice", "square", "--k-int", "1..5", "--format", "json"});
    CHECK(pos.exit_code == 0);
    const Json posdoc = Json::parse(pos.out);
    validate_document(posdoc);
    CHECK(posdoc["results"]["findings"].size() == 5);

    auto tri = run({"search", "--lattice", "triangular", "--k-sqrt3", "1..6", "--format",
                    "json"});
    CHECK(tri.exit_code == 0);
    const Json tridoc = Json::parse(tri.out);
    validate_document(tridoc);
    bool found_known = false;
    for (const auto& f : tridoc["results"]["findings"]) {
        if (f["k"] == "2*sqrt(3)") {
            found_known = true;
            CHECK(f["matrix"] == Json::parse("[[0,1],[-1,4]]"));
            CHECK(f["scalar"]["exact"] == "2-sqrt(3)");
        }
    }
    CHECK(found_known);
}

TEST_CASE("points CSV dump") {
    auto res = run({"points", "square", "--k", "2", "--radius", "2"});
    REQUIRE(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 26);  // header + 5x5 grid
    CHECK(rows[0] == std::vector<std::string>{"m", "n", "x", "y", "x_prime", "y_prime", "M_m",
                                              "M_n"});

    const InducedMap im = induced_map(square_family(2));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 8);
        const long long m = std::stoll(rows[i][0]);
        const long long n = std::stoll(rows[i][1]);
        // integer image columns reproduce the induced map exactly
        const LatticePoint q = im.matrix.apply({m, n, LatticeKind::square});
        CHECK(Int(std::stoll(rows[i][6])) == q.m);
        CHECK(Int(std::stoll(rows[i][7])) == q.n);
        if (m == 0 && n == 0)
            for (int c = 2; c < 8; ++c) CHECK(std::stod(rows[i][c]) == 0.0);
        if (m == 1 && n == 0) {
            CHECK(rows[i][4] == "0.292893218813");
            CHECK(rows[i][5] == "-0.292893218813");
        }
    }

    auto tri = run({"points", "triangular", "--radius", "1"});
    REQUIRE(tri.exit_code == 0);
    auto trows = parse_csv(tri.out);
    REQUIRE(trows.size() == 10);
    for (std::size_t i = 1; i < trows.size(); ++i) {
        if (trows[i][0] == "1" && trows[i][1] == "0") {
            CHECK(trows[i][4] == "0.133974596216");
            CHECK(trows[i][5] == "-0.232050807569");
        }
    }
}

TEST_CASE("render SVG") {
    auto res = run({"render", "square", "--k", "2", "--radius", "8"});
    REQUIRE(res.exit_code == 0);
    CHECK(count_occurrences(res.out, "r=\"3.2\"") == 289);  // (2*8+1)^2 open circles
    CHECK(count_occurrences(res.out, "r=\"2.0\"") == 289);  // transformed dots
    CHECK(count_occurrences(res.out, "<line") == 1);
    CHECK(res.out.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n", 0) == 0);

    auto tri = run({"render", "triangular", "--radius", "1"});
    REQUIRE(tri.exit_code == 0);
    CHECK(count_occurrences(tri.out, "r=\"3.2\"") == 9);
    // the 1 + omega vertex sits at (0.5, sqrt3/2) lattice units from center
    CHECK(tri.out == read_file(source_path("tests/golden/render_triangular_r1.svg")));

    // byte determinism
    auto again = run({"render", "triangular", "--radius", "1"});
    CHECK(again.out == tri.out);
}

TEST_CASE("check-float command") {
    auto ok = run({"check-float", "--lattice", "square", "--k", "3", "--samples", "2000",
                   "--format", "json"});
    CHECK(ok.exit_code == 0);
    const Json okdoc = Json::parse(ok.out);
    validate_document(okdoc);
    CHECK(okdoc["results"]["pass"] == true);

    auto tight = run({"check-float", "--lattice", "square", "--k", "3", "--samples", "2000",
                      "--tol", "1e-30"});
    CHECK(tight.exit_code == 1);  // double rounding is above 1e-30

    auto origin = run({"check-float", "--lattice", "triangular", "--samples", "1", "--format",
                       "json"});
    CHECK(origin.exit_code == 0);
    CHECK(Json::parse(origin.out)["results"]["max_deviation"] == "0");
}

TEST_CASE("--output writes the payload to a file") {
    const std::string path = "/tmp/scalesym_test_report.json";
    std::remove(path.c_str());
    auto res = run({"verify", "triangular", "--format", "json", "--output", path});
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    auto direct = run({"verify", "triangular", "--format", "json"});
    CHECK(read_file(path) == direct.out);
    std::remove(path.c_str());

    auto bad = run({"verify", "triangular", "--output", "/nonexistent-dir/report.json"});
    CHECK(bad.exit_code == 3);
}

TEST_CASE("reports are byte-deterministic and round-trip") {
    auto a = run({"verify", "square", "--k", "5", "--format", "json"});
    auto b = run({"verify", "square", "--k", "5", "--format", "json"});
    CHECK(a.out == b.out);

    const Json doc = Json::parse(a.out);
    CHECK(Json::parse(doc.dump()) == doc);

    auto t1 = run({"verify", "square", "--k", "5"});
    auto t2 = run({"verify", "square", "--k", "5"});
    CHECK(t1.out == t2.out);
}
