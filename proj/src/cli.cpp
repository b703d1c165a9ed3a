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

#include "scalesym/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "scalesym/report.hpp"
#include "scalesym/svg.hpp"

namespace scalesym {

namespace {

constexpr long long kMaxK = 1000000;

struct Options {
    std::string format = "table";
    std::string output;

    std::string lattice;
    long long k = 0;
    bool k_set = false;
    long long radius = 0;
    long long grid_radius = 20;
    std::string k_int, k_sqrt3, k_mixed;
    long long samples = 10000;
    double tol = 1e-9;
    unsigned long long seed = 12345;
};

struct UsageError : Error {
    using Error::Error;
};

LatticeKind parse_kind(const std::string& s) {
    if (s == "square") return LatticeKind::square;
    if (s == "triangular") return LatticeKind::triangular;
    throw UsageError("lattice must be 'square' or 'triangular'");
}

/// verify/points/render/check-float build one transform from lattice + --k.
DirectionalScaling scaling_from_options(const Options& opt) {
    const LatticeKind kind = parse_kind(opt.lattice);
    if (kind == LatticeKind::square) {
        if (!opt.k_set) throw UsageError("square lattice requires --k");
        if (opt.k < 1 || opt.k > kMaxK)
            throw UsageError("--k must be in [1, " + std::to_string(kMaxK) + "]");
        return square_family(opt.k);
    }
    if (opt.k_set) throw UsageError("--k applies to the square lattice only");
    return triangular_known();
}

std::string case_label(const Options& opt) {
    if (opt.lattice == "square") return "square family k=" + std::to_string(opt.k);
    return "triangular pi/12";
}

std::pair<long long, long long> parse_range(const std::string& text, const char* flag) {
    static const std::regex re(R"(^(-?\d{1,10})\.\.(-?\d{1,10})$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw UsageError(std::string(flag) + " expects a range MIN..MAX");
    long long lo = std::stoll(m[1].str());
    long long hi = std::stoll(m[2].str());
    if (lo > hi) throw UsageError(std::string(flag) + " range is empty");
    return {lo, hi};
}

Json verify_inputs(const Options& opt) {
    Json j;
    j["lattice"] = opt.lattice;
    j["k"] = opt.k_set ? Json(opt.k) : Json(nullptr);
    j["radius"] = opt.radius;
    return j;
}

RunResult cmd_verify(const Options& opt) {
    DirectionalScaling ds = scaling_from_options(opt);
    auto im = try_induced_map(ds);
    SymmetryReport rep = make_report(ds, im, case_label(opt));
    GridReport grid;
    if (im) grid = grid_coincidence_check(ds, opt.radius);
    const bool ok = rep.verified && im && grid.failures == 0 && grid.injective;

    RunResult res;
    res.exit_code = ok ? 0 : 1;
    if (opt.format == "json") {
        Json results;
        results["report"] = symmetry_report_json(rep);
        results["grid"] = grid_report_json(grid, opt.radius);
        res.out = make_document("verify", verify_inputs(opt), results).dump(2) + "\n";
    } else {
        res.out = verify_table(rep, grid, opt.radius);
    }
    return res;
}

RunResult cmd_family(const Options& opt) {
    if (opt.k < 1 || opt.k > kMaxK)
        throw UsageError("--k-max must be in [1, " + std::to_string(kMaxK) + "]");
    auto rows = verify_square_family(opt.k);

    RunResult res;
    if (opt.format == "json") {
        Json inputs;
        inputs["k_max"] = opt.k;
        Json results;
        results["rows"] = Json::array();
        for (const auto& rep : rows) results["rows"].push_back(symmetry_report_json(rep));
        res.out = make_document("family", std::move(inputs), std::move(results)).dump(2) + "\n";
    } else {
        res.out = family_table(rows);
    }
    return res;
}

RunResult cmd_search(const Options& opt) {
    SearchSpec spec;
    spec.kind = parse_kind(opt.lattice);
    const int forms = !opt.k_int.empty() + !opt.k_sqrt3.empty() + !opt.k_mixed.empty();
    if (forms != 1)
        throw UsageError("exactly one of --k-int, --k-sqrt3, --k-mixed is required");
    if (opt.grid_radius < 1 || opt.grid_radius > 1000)
        throw UsageError("--grid-radius must be in [1, 1000]");
    spec.grid_radius = opt.grid_radius;

    Json inputs;
    inputs["lattice"] = opt.lattice;
    long long candidates = 0;
    if (!opt.k_int.empty()) {
        spec.form = SearchSpec::Form::integer_range;
        std::tie(spec.lo_a, spec.hi_a) = parse_range(opt.k_int, "--k-int");
        if (spec.lo_a < 1) throw UsageError("--k-int candidates must be positive");
        inputs["k_int"] = opt.k_int;
        candidates = spec.hi_a - spec.lo_a + 1;
    } else if (!opt.k_sqrt3.empty()) {
        spec.form = SearchSpec::Form::sqrt3_multiples;
        std::tie(spec.lo_b, spec.hi_b) = parse_range(opt.k_sqrt3, "--k-sqrt3");
        if (spec.lo_b < 1) throw UsageError("--k-sqrt3 candidates must be positive");
        inputs["k_sqrt3"] = opt.k_sqrt3;
        candidates = spec.hi_b - spec.lo_b + 1;
    } else {
        spec.form = SearchSpec::Form::mixed_q3;
        auto comma = opt.k_mixed.find(',');
        if (comma == std::string::npos)
            throw UsageError("--k-mixed expects AMIN..AMAX,BMIN..BMAX");
        std::tie(spec.lo_a, spec.hi_a) =
            parse_range(opt.k_mixed.substr(0, comma), "--k-mixed");
        std::tie(spec.lo_b, spec.hi_b) =
            parse_range(opt.k_mixed.substr(comma + 1), "--k-mixed");
        inputs["k_mixed"] = opt.k_mixed;
        candidates = (spec.hi_a - spec.lo_a + 1) * (spec.hi_b - spec.lo_b + 1);
    }
    if (candidates > 100000) throw UsageError("candidate range too large");
    inputs["grid_radius"] = spec.grid_radius;

    auto findings = search(spec);

    RunResult res;
    if (opt.format == "json") {
        Json results;
        results["candidates_checked"] = candidates;
        results["findings"] = Json::array();
        for (const auto& rep : findings) results["findings"].push_back(symmetry_report_json(rep));
        res.out = make_document("search", std::move(inputs), std::move(results)).dump(2) + "\n";
    } else {
        res.out = search_table(findings, candidates);
    }
    return res;  // empty findings is a result, not a failure
}

RunResult cmd_points(const Options& opt) {
    if (opt.radius < 1 || opt.radius > 5000)
        throw UsageError("--radius must be in [1, 5000]");
    DirectionalScaling ds = scaling_from_options(opt);
    const InducedMap im = induced_map(ds);

    std::ostringstream os;
    os << "m,n,x,y,x_prime,y_prime,M_m,M_n\n";
    for (long long m = -opt.radius; m <= opt.radius; ++m) {
        for (long long n = -opt.radius; n <= opt.radius; ++n) {
            const LatticePoint p{m, n, ds.kind};
            const auto xy = point_xy(p);
            const auto image = apply_exact(ds, p).embed();
            const LatticePoint q = im.matrix.apply(p);
            os << m << "," << n << "," << fmt_double(xy[0]) << "," << fmt_double(xy[1]) << ","
               << fmt_double(image.real()) << "," << fmt_double(image.imag()) << "," << q.m.str()
               << "," << q.n.str() << "\n";
        }
    }
    RunResult res;
    res.out = os.str();
    return res;
}

RunResult cmd_render(const Options& opt) {
    if (opt.radius < 1 || opt.radius > 500)
        throw UsageError("--radius must be in [1, 500]");
    DirectionalScaling ds = scaling_from_options(opt);
    const InducedMap im = induced_map(ds);
    RunResult res;
    res.out = render_lattice_svg(ds, im, opt.radius);
    return res;
}

RunResult cmd_check_float(const Options& opt) {
    if (opt.samples < 1 || opt.samples > 100000000)
        throw UsageError("--samples must be in [1, 1e8]");
    if (!(opt.tol > 0.0)) throw UsageError("--tol must be positive");
    DirectionalScaling ds = scaling_from_options(opt);
    const FloatAgreement fa = check_float_agreement(ds, opt.samples, opt.tol, opt.seed);

    RunResult res;
    res.exit_code = fa.pass ? 0 : 1;
    if (opt.format == "json") {
        Json inputs;
        inputs["lattice"] = opt.lattice;
        inputs["k"] = opt.k_set ? Json(opt.k) : Json(nullptr);
        inputs["samples"] = opt.samples;
        inputs["tol"] = fmt_double(opt.tol);
        inputs["seed"] = opt.seed;
        Json results;
        results["max_deviation"] = fmt_double(fa.max_deviation);
        results["pass"] = fa.pass;
        res.out = make_document("check-float", std::move(inputs), std::move(results)).dump(2) +
                  "\n";
    } else {
        res.out = check_float_table(fa, opt.tol, opt.seed, case_label(opt));
    }
    return res;
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"exact directional scaling symmetries of square and triangular lattices"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "write the report to this path instead of stdout");

    auto add_lattice_positional = [&](CLI::App* sub) {
        sub->add_option("lattice", opt.lattice, "square or triangular")
            ->required()
            ->check(CLI::IsMember({"square", "triangular"}));
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k", opt.k, "family parameter (square lattice)")
            ->each([&](const std::string&) { opt.k_set = true; });
    };

    CLI::App* verify = app.add_subcommand("verify", "verify one directional scaling symmetry");
    add_lattice_positional(verify);
    add_k(verify);
    verify->add_option("--radius", opt.radius, "grid sweep radius")->default_val(50);

    CLI::App* family = app.add_subcommand("family", "table of the square-lattice family");
    family->add_option("--k-max", opt.k, "largest k")->required();

    CLI::App* srch = app.add_subcommand("search", "search candidate directions");
    srch->add_option("--lattice", opt.lattice, "square or triangular")
        ->required()
        ->check(CLI::IsMember({"square", "triangular"}));
    srch->add_option("--k-int", opt.k_int, "integer candidates MIN..MAX");
    srch->add_option("--k-sqrt3", opt.k_sqrt3, "k = b*sqrt(3) candidates MIN..MAX");
    srch->add_option("--k-mixed", opt.k_mixed, "k = a + b*sqrt(3), AMIN..AMAX,BMIN..BMAX");
    srch->add_option("--grid-radius", opt.grid_radius, "confirmation sweep radius")
        ->default_val(20);

    CLI::App* points = app.add_subcommand("points", "CSV dump of points and their images");
    add_lattice_positional(points);
    add_k(points);
    points->add_option("--radius", opt.radius, "grid radius")->required();

    CLI::App* render = app.add_subcommand("render", "SVG rendering of lattice and image");
    add_lattice_positional(render);
    add_k(render);
    render->add_option("--radius", opt.radius, "grid radius")->required();

    CLI::App* chk = app.add_subcommand("check-float", "cross-validate exact vs float paths");
    chk->add_option("--lattice", opt.lattice, "square or triangular")
        ->required()
        ->check(CLI::IsMember({"square", "triangular"}));
    add_k(chk);
    chk->add_option("--samples", opt.samples, "number of random points")->capture_default_str();
    chk->add_option("--tol", opt.tol, "max allowed deviation")->capture_default_str();
    chk->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();

    for (auto* sub : {verify, family, srch, points, render, chk}) sub->fallthrough();

    RunResult res;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.out = os.str();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    }

    try {
        if (app.got_subcommand(verify)) {
            if (opt.radius < 1 || opt.radius > 5000)
                throw UsageError("--radius must be in [1, 5000]");
            res = cmd_verify(opt);
        } else if (app.got_subcommand(family)) {
            res = cmd_family(opt);
        } else if (app.got_subcommand(srch)) {
            res = cmd_search(opt);
        } else if (app.got_subcommand(points)) {
            res = cmd_points(opt);
        } else if (app.got_subcommand(render)) {
            res = cmd_render(opt);
        } else {
            res = cmd_check_float(opt);
        }
    } catch (const UsageError& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const Error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    }

    if (!opt.output.empty()) {
        std::ofstream file(opt.output, std::ios::binary);
        if (!file) {
            res.err = "error: cannot open '" + opt.output + "' for writing\n";
            res.exit_code = 3;
            return res;
        }
        file << res.out;
        file.close();
        if (!file) {
            res.err = "error: failed writing '" + opt.output + "'\n";
            res.exit_code = 3;
            return res;
        }
        res.out.clear();
    }
    return res;
}

}  // namespace scalesym
