#pragma once

/// \file
/// \brief JSON reports and CSV/JSON sweep tables.
///
/// Report schema (version 1):
///   { "schema": 1, "id": str, "status": "pass"|"fail"|"inconclusive",
///     "pass": bool, "metrics": {name: number}, "tolerances":
///     {name: {"bound": "max"|"min", "value": number}}, "samples": int,
///     "notes": [str] }

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "poncelet/experiments.hpp"
#include "poncelet/io/complex_literal.hpp"

namespace poncelet::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json point_json(CPoint p) { return json::array({p.real(), p.imag()}); }

inline json report_to_json(const experiments::PropositionReport& r)
{
    json tol = json::object();
    for (const auto& [name, t] : r.tolerances())
        tol[name] = {{"bound", t.bound == experiments::Bound::at_most ? "max" : "min"}, {"value", t.value}};
    json j;
    j["schema"] = kSchemaVersion;
    j["id"] = r.id();
    j["status"] = experiments::to_string(r.status());
    j["pass"] = r.pass();
    j["metrics"] = r.metrics();
    j["tolerances"] = tol;
    j["samples"] = r.samples();
    j["notes"] = r.notes();
    return j;
}

inline json reports_to_json(const std::vector<experiments::PropositionReport>& reports)
{
    json arr = json::array();
    bool all = true;
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
        all = all && r.pass();
    }
    return {{"schema", kSchemaVersion}, {"id", "all"}, {"pass", all}, {"reports", arr}};
}

inline std::string format_g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string join_flags(unsigned f)
{
    const auto names = experiments::flag_names(f);
    if (names.empty())
        return "none";
    std::string out;
    for (const auto& n : names)
        out += (out.empty() ? "" : "|") + n;
    return out;
}

/// lambda_phase,v1x,v1y,v2x,v2y,v3x,v3y,<center>_x,<center>_y,...,flags
/// Rows inside excluded windows are omitted.
inline void write_sweep_csv(const experiments::SweepResult& res, std::ostream& os)
{
    os << "lambda_phase,v1x,v1y,v2x,v2y,v3x,v3y";
    for (auto c : res.centers)
        os << ',' << centers::to_string(c) << "_x," << centers::to_string(c) << "_y";
    os << ",flags\n";
    for (const auto& s : res.samples) {
        if (s.flags & experiments::flags::excluded)
            continue;
        os << format_g17(s.phase);
        for (CPoint v : s.triangle.vertices())
            os << ',' << format_g17(v.real()) << ',' << format_g17(v.imag());
        for (auto c : res.centers) {
            auto it = s.centers.find(c);
            if (it == s.centers.end())
                os << ",nan,nan";
            else
                os << ',' << format_g17(it->second.real()) << ',' << format_g17(it->second.imag());
        }
        os << ',' << join_flags(s.flags) << '\n';
    }
}

inline json sweep_to_json(const experiments::SweepResult& res)
{
    json samples = json::array();
    for (const auto& s : res.samples) {
        json centers_j = json::object();
        for (const auto& [c, p] : s.centers)
            centers_j[std::string(centers::to_string(c))] = point_json(p);
        json verts = json::array();
        for (CPoint v : s.triangle.vertices())
            verts.push_back(point_json(v));
        samples.push_back({{"lambda_phase", s.phase},
                           {"vertices", verts},
                           {"centers", centers_j},
                           {"flags", experiments::flag_names(s.flags)}});
    }
    json windows = json::array();
    for (const auto& w : res.windows)
        windows.push_back({{"phase", w.phase}, {"radius", w.radius}, {"reason", w.reason}});
    json names = json::array();
    for (auto c : res.centers)
        names.push_back(std::string(centers::to_string(c)));
    return {{"schema", kSchemaVersion},
            {"f", format_complex(res.cfg.f())},
            {"g", format_complex(res.cfg.g())},
            {"family", experiments::to_string(res.kind)},
            {"centers", names},
            {"excluded_windows", windows},
            {"samples", samples}};
}

} // namespace poncelet::io
