// ldp12 - exact checks of the lattice-point identity
//   12 * sum over Delta of (kappa+1)^2 = nvol(Delta) + nvol(Delta*)
// for LDP polygons, together with the cone-wise identity, reduction
// traces, Dedekind sums, corpus generation and SVG export.
//
// Exit codes: 0 all checks pass, 1 an identity check failed (which would
// mean a bug in this implementation, not in the theorem), 2 invalid input.

#include "ldp/corpus.hpp"
#include "ldp/dedekind.hpp"
#include "ldp/identity.hpp"
#include "ldp/json_io.hpp"
#include "ldp/reduction.hpp"
#include "ldp/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ldp::LatticePolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return ldp::polygon_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

ldp::LatticePolygon read_ldp_polygon_file(const std::string& path) {
    ldp::LatticePolygon poly = read_polygon_file(path);
    if (!ldp::contains_origin_interior(poly)) throw InputError("origin not strictly interior");
    for (const ldp::LatticePoint& v : poly.vertices) {
        if (!ldp::is_primitive(v)) throw InputError("vertex not primitive");
    }
    return poly;
}

ldp::LatticePoint parse_point_arg(const std::string& arg) {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw InputError("point must be given as 'x,y'");
    try {
        return {ldp::parse_int(arg.substr(0, comma)), ldp::parse_int(arg.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

int cmd_verify(const std::string& input, bool per_cone) {
    ldp::LatticePolygon poly = read_ldp_polygon_file(input);
    ldp::VerificationReport report = ldp::verify_polygon(poly, per_cone);
    std::cout << ldp::to_json(report).dump(2) << "\n";
    return report.all_ok() ? 0 : 1;
}

int cmd_cone(const std::string& a1, const std::string& a2, bool trace) {
    ldp::Cone cone;
    try {
        cone = ldp::cone_params(parse_point_arg(a1), parse_point_arg(a2));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    ldp::ConeCheck check = ldp::verify_cone(cone);
    json out = ldp::to_json(check);
    out["sail"] = ldp::to_json(ldp::sail_of(cone));
    if (trace) {
        json steps = json::array();
        for (const ldp::ReductionStep& s : ldp::reduction_chain(cone)) {
            steps.push_back(ldp::to_json(s));
        }
        out["reduction"] = std::move(steps);
    }
    std::cout << out.dump(2) << "\n";
    return check.ok ? 0 : 1;
}

int cmd_batch(std::uint64_t seed, long count, int bound, const std::string& emit_path) {
    if (count < 0) throw InputError("count must be non-negative");
    if (bound < 1) throw InputError("bound must be positive");
    std::ofstream emit;
    if (!emit_path.empty()) {
        emit.open(emit_path);
        if (!emit) throw InputError("cannot open '" + emit_path + "' for writing");
    }
    long pass = 0, fail = 0;
    bool have_extremes = false;
    ldp::Rat min_rhs, max_rhs;
    for (long i = 0; i < count; ++i) {
        ldp::LatticePolygon poly = ldp::random_ldp(seed + static_cast<std::uint64_t>(i), bound, 8);
        if (emit.is_open()) emit << ldp::to_json(poly).dump() << "\n";
        ldp::VerificationReport report = ldp::verify_polygon(poly, false);
        (report.all_ok() ? pass : fail) += 1;
        if (!have_extremes) {
            min_rhs = max_rhs = report.rhs;
            have_extremes = true;
        } else {
            min_rhs = std::min(min_rhs, report.rhs);
            max_rhs = std::max(max_rhs, report.rhs);
        }
    }
    json out{{"pass", pass}, {"fail", fail}};
    if (have_extremes) {
        out["min_rhs"] = ldp::to_string(min_rhs);
        out["max_rhs"] = ldp::to_string(max_rhs);
    }
    std::cout << out.dump(2) << "\n";
    return fail == 0 ? 0 : 1;
}

int cmd_dedekind(const std::string& h_arg, const std::string& k_arg) {
    ldp::Int h, k;
    try {
        h = ldp::parse_int(h_arg);
        k = ldp::parse_int(k_arg);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    try {
        std::cout << ldp::to_string(ldp::dedekind_sum_fast(h, k)) << "\n";
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
    return 0;
}

int cmd_svg(const std::string& input, const std::string& what, const std::string& out_path) {
    ldp::LatticePolygon poly = read_ldp_polygon_file(input);
    ldp::SvgKind kind;
    if (what == "polygon") {
        kind = ldp::SvgKind::Polygon;
    } else if (what == "dual") {
        kind = ldp::SvgKind::Dual;
    } else if (what == "sails") {
        kind = ldp::SvgKind::Sails;
    } else if (what == "dual-chain") {
        kind = ldp::SvgKind::DualChain;
    } else {
        throw InputError("unknown figure '" + what + "'");
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open '" + out_path + "' for writing");
    out << ldp::render_svg(poly, kind);
    if (!out) throw InputError("failed writing '" + out_path + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-polygon identity checks"};
    app.require_subcommand(1);

    std::string input, what = "polygon", out_path, emit_path;
    std::string gen1, gen2, h_arg, k_arg;
    bool per_cone = false, trace = false;
    std::uint64_t seed = 1;
    long count = 100;
    int bound = 10;

    CLI::App* verify = app.add_subcommand("verify", "check all identities for a polygon file");
    verify->add_option("input", input, "polygon JSON file")->required();
    verify->add_flag("--per-cone", per_cone, "include the per-cone report array");

    CLI::App* cone = app.add_subcommand("cone", "report on a single cone");
    cone->add_option("u1", gen1, "first generator 'x,y'")->required();
    cone->add_option("u2", gen2, "second generator 'x,y'")->required();
    cone->add_flag("--trace-reduction", trace, "append the reduction chain");

    CLI::App* batch = app.add_subcommand("batch", "verify a deterministic random corpus");
    batch->add_option("--seed", seed, "base seed");
    batch->add_option("--count", count, "number of polygons");
    batch->add_option("--bound", bound, "coordinate bound");
    batch->add_option("--emit", emit_path, "write generated polygons as JSON lines");

    CLI::App* dedekind = app.add_subcommand("dedekind", "print the Dedekind sum s(h, k)");
    dedekind->add_option("h", h_arg, "numerator parameter")->required();
    dedekind->add_option("k", k_arg, "modulus, k >= 1")->required();

    CLI::App* svg = app.add_subcommand("svg", "export a figure as SVG");
    svg->add_option("input", input, "polygon JSON file")->required();
    svg->add_option("--what", what, "polygon | dual | sails | dual-chain");
    svg->add_option("--out", out_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(input, per_cone);
        if (cone->parsed()) return cmd_cone(gen1, gen2, trace);
        if (batch->parsed()) return cmd_batch(seed, count, bound, emit_path);
        if (dedekind->parsed()) return cmd_dedekind(h_arg, k_arg);
        if (svg->parsed()) return cmd_svg(input, what, out_path);
    } catch (const InputError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
