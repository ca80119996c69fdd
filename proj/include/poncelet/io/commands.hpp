#pragma once

/// \file
/// \brief Command implementations behind the poncelet CLI. Each returns the
/// process exit code: 0 pass, 1 fail, 2 usage, 3 io, 4 inconclusive.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "poncelet/experiments.hpp"
#include "poncelet/family.hpp"
#include "poncelet/io/complex_literal.hpp"
#include "poncelet/io/serialize.hpp"
#include "poncelet/io/svg.hpp"

namespace poncelet::io {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int fail = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
inline constexpr int inconclusive = 4;
} // namespace exit_code

/// Claim tolerance from PONCELET_TOL, if set and valid.
inline experiments::Tolerances tolerances_from_env(experiments::Tolerances base = {})
{
    if (const char* env = std::getenv("PONCELET_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v))
            base.claim = v;
    }
    return base;
}

struct RunConfig {
    std::optional<std::string> f;
    std::optional<std::string> g;
    std::string lambda = "1";
    int samples = experiments::kDefaultSamples;
    std::vector<std::string> centers;
    std::string family = "reference";
    std::string out_format = "csv";
    std::string format = "text";
    std::string output = "-";
    std::string svg_path;
    std::uint64_t seed = 1;
    std::string k = "1";
    std::string a_eq = "0.5+0.86602540378443865i";
    int m = 20;
    int workers = 1;
    experiments::Tolerances tol;
};

inline family::FamilyConfig config_of(const RunConfig& rc)
{
    if (!rc.f && !rc.g)
        return experiments::reference_config();
    return {parse_complex(rc.f.value_or("0")), parse_complex(rc.g.value_or("0"))};
}

/// Writes `content` to `path` ("-" means `out`); false on I/O failure.
inline bool write_output(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path == "-" || path.empty()) {
        out << content;
        return static_cast<bool>(out);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        return false;
    f << content;
    f.close();
    return static_cast<bool>(f);
}

inline int exit_for(experiments::Status s)
{
    switch (s) {
    case experiments::Status::pass: return exit_code::pass;
    case experiments::Status::fail: return exit_code::fail;
    case experiments::Status::inconclusive: return exit_code::inconclusive;
    }
    return exit_code::fail;
}

inline int cmd_family(const RunConfig& rc, std::ostream& out, std::ostream& err)
{
    family::FamilyConfig cfg;
    family::LambdaParam lambda;
    try {
        cfg = config_of(rc);
        lambda = family::LambdaParam(parse_complex(rc.lambda), 1e-9);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    const auto tri = family::triangle_at(cfg, lambda);
    const auto caustic = cfg.caustic();
    const auto [f1, f2] = caustic.foci();
    const bool eq = family::contains_equilateral(cfg);

    json j;
    j["schema"] = kSchemaVersion;
    j["f"] = format_complex(cfg.f());
    j["g"] = format_complex(cfg.g());
    j["lambda"] = format_complex(lambda.value());
    json verts = json::array();
    for (CPoint v : tri.vertices())
        verts.push_back(point_json(v));
    j["vertices"] = verts;
    j["caustic"] = {{"center", point_json(caustic.center)},
                    {"semi_major", caustic.a},
                    {"semi_minor", caustic.b},
                    {"rotation", caustic.theta},
                    {"foci", json::array({point_json(f1), point_json(f2)})}};
    j["contains_equilateral"] = eq;
    j["member_equilateral"] = centers::is_equilateral(tri, 1e-9);
    if (eq) {
        const bool all_eq = cfg.f() == CPoint(0.0, 0.0) && cfg.g() == CPoint(0.0, 0.0);
        if (!all_eq) {
            try {
                const auto lo = family::equilateral_lambda(cfg);
                j["lambda_o"] = format_complex(lo.value());
                j["stationary_x110"] = point_json(family::stationary_x110_prediction(cfg));
            } catch (const GeometryError& e) {
                j["note"] = e.what();
            }
        } else {
            j["note"] = "every member is equilateral";
        }
        json ev = json::array();
        for (CPoint v : family::equilateral_vertices(cfg, lambda).vertices())
            ev.push_back(point_json(v));
        j["equilateral_vertices"] = ev;
    }

    if (rc.format == "json") {
        out << j.dump(2) << '\n';
        return exit_code::pass;
    }
    out << "f = " << format_complex(cfg.f()) << "\ng = " << format_complex(cfg.g()) << '\n';
    out << "lambda = " << format_complex(lambda.value()) << '\n';
    for (std::size_t i = 0; i < 3; ++i)
        out << "v" << i + 1 << " = " << format_complex(tri[i]) << '\n';
    out << "caustic: center " << format_complex(caustic.center) << ", a " << format_g17(caustic.a) << ", b "
        << format_g17(caustic.b) << ", rotation " << format_g17(caustic.theta) << '\n';
    out << "equilateral member: " << (eq ? "yes" : "no") << '\n';
    if (j.contains("lambda_o"))
        out << "lambda_o = " << j["lambda_o"].get<std::string>() << '\n';
    if (j.contains("stationary_x110"))
        out << "stationary X110 = " << format_complex(family::stationary_x110_prediction(cfg)) << '\n';
    return exit_code::pass;
}

inline int cmd_sweep(const RunConfig& rc, std::ostream& out, std::ostream& err)
{
    family::FamilyConfig cfg;
    std::vector<centers::CenterIndex> wanted;
    experiments::SweepOptions opt;
    try {
        cfg = config_of(rc);
        for (const auto& name : rc.centers) {
            std::stringstream ss(name);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty())
                    continue;
                const auto c = centers::parse_center(item);
                if (!c)
                    throw std::invalid_argument("unknown center index '" + item + "'");
                wanted.push_back(*c);
            }
        }
        if (rc.samples < 16)
            throw std::invalid_argument("N must be at least 16");
        if (rc.family == "tangential")
            opt.kind = experiments::FamilyKind::tangential;
        else if (rc.family != "reference")
            throw std::invalid_argument("unknown family '" + rc.family + "'");
        if (rc.out_format != "csv" && rc.out_format != "json")
            throw std::invalid_argument("unknown output format '" + rc.out_format + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    opt.workers = rc.workers;
    opt.tol = rc.tol.kernel;
    const auto res = experiments::sweep(cfg, rc.samples, wanted, opt);
    std::ostringstream body;
    if (rc.out_format == "csv")
        write_sweep_csv(res, body);
    else
        body << sweep_to_json(res).dump(2) << '\n';
    if (!write_output(rc.output, body.str(), out)) {
        err << "error: cannot write '" << rc.output << "'\n";
        return exit_code::io;
    }
    return exit_code::pass;
}

inline const std::vector<std::string>& verifier_ids()
{
    static const std::vector<std::string> ids{"x110-stationary", "x3233-circle", "double-inv-1",
                                              "l35",             "l35-vertex",   "feuerbach",
                                              "x65-circle",      "polar-equilateral", "tangential-envelope"};
    return ids;
}

/// Runs one verifier; throws std::invalid_argument on an unknown id or bad
/// parameters.
inline experiments::PropositionReport run_verifier(const std::string& id, const RunConfig& rc)
{
    using namespace experiments;
    const auto tol = rc.tol;
    if (id == "x110-stationary")
        return verify_x110_stationary(config_of(rc), rc.samples, tol);
    if (id == "x3233-circle")
        return verify_x3233_circle(config_of(rc), rc.samples, tol);
    if (id == "feuerbach")
        return verify_feuerbach_stationary(config_of(rc), rc.samples, tol);
    if (id == "x65-circle")
        return verify_x65_circle(config_of(rc), rc.samples, tol);
    if (id == "tangential-envelope")
        return verify_tangential_envelope(config_of(rc), rc.samples, tol);
    if (id == "double-inv-1")
        return verify_prop_double_inv(parse_complex(rc.k), parse_complex(rc.a_eq), rc.m, tol);
    if (id == "polar-equilateral")
        return verify_observation_polar_equilateral(equilateral_corpus(rc.seed), tol);
    if (id == "l35" || id == "l35-vertex") {
        // Explicit f, g: member at --lambda. Otherwise a random family with an
        // equilateral member and a random scalene member, from --seed.
        family::FamilyConfig cfg;
        Triangle t_o;
        if (rc.f || rc.g) {
            cfg = config_of(rc);
            t_o = family::triangle_at(cfg, family::LambdaParam(parse_complex(rc.lambda), 1e-9));
        } else {
            std::mt19937_64 rng(rc.seed);
            cfg = random_equilateral_config(rng);
            t_o = random_generic_member(cfg, rng);
        }
        if (id == "l35")
            return verify_prop_l35(t_o, rc.m, cfg.center(), tol);
        return verify_prop_l35_vertex(t_o, cfg.center(), tol);
    }
    throw std::invalid_argument("unknown proposition id '" + id + "'");
}

inline int cmd_verify(const std::string& id, const RunConfig& rc, std::ostream& out, std::ostream& err)
{
    std::vector<experiments::PropositionReport> reports;
    try {
        if (id == "all") {
            experiments::RunAllOptions opt;
            opt.seed = rc.seed;
            opt.samples = rc.samples;
            opt.tol = rc.tol;
            reports = experiments::run_all(opt);
        } else {
            reports.push_back(run_verifier(id, rc));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    const json j = id == "all" ? reports_to_json(reports) : report_to_json(reports.front());
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (rc.output != "-" && !write_output(rc.output, text, out)) {
        err << "error: cannot write '" << rc.output << "'\n";
        return exit_code::io;
    }
    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        any_fail = any_fail || r.status() == experiments::Status::fail;
        any_inconclusive = any_inconclusive || r.status() == experiments::Status::inconclusive;
    }
    if (any_fail)
        return exit_code::fail;
    return any_inconclusive ? exit_code::inconclusive : exit_code::pass;
}

inline int cmd_render(const RunConfig& rc, std::ostream& out, std::ostream& err)
{
    family::FamilyConfig cfg;
    family::LambdaParam lambda;
    try {
        cfg = config_of(rc);
        lambda = family::LambdaParam(parse_complex(rc.lambda), 1e-9);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    std::ostringstream svg;
    render_family_svg(cfg, lambda, svg);
    if (!write_output(rc.svg_path.empty() ? "-" : rc.svg_path, svg.str(), out)) {
        err << "error: cannot write '" << rc.svg_path << "'\n";
        return exit_code::io;
    }
    return exit_code::pass;
}

} // namespace poncelet::io
