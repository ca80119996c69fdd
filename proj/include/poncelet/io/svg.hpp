#pragma once

/// \file
/// \brief Standalone SVG of a family: circumcircle, caustic, outer conic,
/// a member and the equilateral member, the Kiepert parabola, swept loci and
/// labeled centers. Plane y is flipped so the picture reads mathematically.

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "poncelet/dual_families.hpp"
#include "poncelet/experiments.hpp"
#include "poncelet/family.hpp"
#include "poncelet/tri_centers.hpp"

namespace poncelet::io {

inline constexpr double kViewHalf = 1.6;

namespace svg_detail {

inline std::string num(double v)
{
    double r = std::round(v * 1e6) / 1e6;
    if (std::abs(r) < 5e-7)
        r = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

inline std::string xy(CPoint p) { return num(p.real()) + "," + num(-p.imag()); }

inline bool in_view(CPoint p) { return std::abs(p.real()) <= kViewHalf && std::abs(p.imag()) <= kViewHalf; }

/// Splits a sampled curve into runs that stay inside the view box.
inline void polylines(std::ostream& os, const std::vector<std::optional<CPoint>>& pts, const std::string& style,
                      bool closed = false)
{
    std::vector<std::vector<CPoint>> runs(1);
    for (const auto& p : pts) {
        if (p && in_view(*p))
            runs.back().push_back(*p);
        else if (!runs.back().empty())
            runs.emplace_back();
    }
    if (closed && runs.size() > 1 && !runs.front().empty() && !runs.back().empty()) {
        runs.back().insert(runs.back().end(), runs.front().begin(), runs.front().end());
        runs.erase(runs.begin());
    }
    for (const auto& r : runs) {
        if (r.size() < 2)
            continue;
        os << "    <polyline fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? " " : "") << xy(r[i]);
        os << "\"/>\n";
    }
}

inline void ellipse(std::ostream& os, const geom::EllipseG& e, const std::string& id, const std::string& style)
{
    const double deg = -e.theta * 180.0 / kPi;
    os << "    <ellipse id=\"" << id << "\" cx=\"" << num(e.center.real()) << "\" cy=\"" << num(-e.center.imag())
       << "\" rx=\"" << num(e.a) << "\" ry=\"" << num(e.b) << "\" transform=\"rotate(" << num(deg) << ' '
       << num(e.center.real()) << ' ' << num(-e.center.imag()) << ")\" fill=\"none\" " << style << "/>\n";
}

inline void polygon(std::ostream& os, const geom::Triangle& t, const std::string& id, const std::string& style)
{
    os << "    <polygon id=\"" << id << "\" fill=\"none\" " << style << " points=\"" << xy(t[0]) << ' ' << xy(t[1])
       << ' ' << xy(t[2]) << "\"/>\n";
}

inline void marker(std::ostream& os, CPoint p, const std::string& label)
{
    os << "    <circle class=\"center\" id=\"" << label << "\" cx=\"" << num(p.real()) << "\" cy=\"" << num(-p.imag())
       << "\" r=\"0.015\" fill=\"black\"/>\n";
    os << "    <text x=\"" << num(p.real() + 0.025) << "\" y=\"" << num(-p.imag() - 0.025)
       << "\" font-size=\"0.06\" font-family=\"sans-serif\">" << label << "</text>\n";
}

} // namespace svg_detail

inline void render_family_svg(const family::FamilyConfig& cfg, const family::LambdaParam& lambda, std::ostream& os)
{
    using namespace svg_detail;
    using centers::CenterIndex;
    const auto member = family::triangle_at(cfg, lambda);
    const bool has_eq = family::contains_equilateral(cfg);

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"" << num(-kViewHalf) << ' '
       << num(-kViewHalf) << ' ' << num(2 * kViewHalf) << ' ' << num(2 * kViewHalf) << "\">\n";
    os << "  <rect x=\"" << num(-kViewHalf) << "\" y=\"" << num(-kViewHalf) << "\" width=\"" << num(2 * kViewHalf)
       << "\" height=\"" << num(2 * kViewHalf) << "\" fill=\"white\"/>\n";

    os << "  <g id=\"conics\" stroke-width=\"0.006\">\n";
    os << "    <circle id=\"circumcircle\" cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" fill=\"none\" "
          "stroke=\"black\"/>\n";
    ellipse(os, cfg.caustic(), "caustic", "stroke=\"green\"");
    const auto outer = geom::conic_to_geometric(dual::outer_conic(cfg));
    if (const auto* e = std::get_if<geom::EllipseG>(&outer))
        ellipse(os, *e, "outer-conic", "stroke=\"gray\" stroke-dasharray=\"0.03 0.02\"");
    os << "  </g>\n";

    os << "  <g id=\"triangles\" stroke-width=\"0.008\">\n";
    polygon(os, member, "member", "stroke=\"blue\"");
    if (has_eq)
        polygon(os, family::equilateral_vertices(cfg), "equilateral", "stroke=\"saddlebrown\"");
    os << "  </g>\n";

    os << "  <g id=\"parabola\" stroke-width=\"0.006\">\n";
    std::optional<geom::ParabolaG> kiepert;
    try {
        kiepert = centers::kiepert_parabola(member);
    } catch (const GeometryError&) {
    }
    if (kiepert) {
        const CPoint vtx = centers::parabola_vertex(*kiepert);
        const CPoint foot = kiepert->directrix.project(kiepert->focus);
        const double p = std::abs(kiepert->focus - foot);
        const CPoint axis = (kiepert->focus - foot) / p;
        const CPoint along = kiepert->directrix.direction();
        std::vector<std::optional<CPoint>> pts;
        const int n = 801;
        const double range = 8.0;
        for (int k = 0; k < n; ++k) {
            const double t = -range + 2.0 * range * k / (n - 1);
            pts.emplace_back(vtx + t * along + (t * t / (2.0 * p)) * axis);
        }
        polylines(os, pts, "stroke=\"orange\"");
    }
    os << "  </g>\n";

    os << "  <g id=\"loci\" stroke-width=\"0.005\">\n";
    {
        const auto res = experiments::sweep(cfg, 360, {CenterIndex::X3233, CenterIndex::X4});
        std::vector<std::optional<CPoint>> x3233, x4;
        for (const auto& s : res.samples) {
            auto a = s.centers.find(CenterIndex::X3233);
            x3233.push_back(a == s.centers.end() ? std::nullopt : std::optional<CPoint>(a->second));
            auto b = s.centers.find(CenterIndex::X4);
            x4.push_back(b == s.centers.end() ? std::nullopt : std::optional<CPoint>(b->second));
        }
        polylines(os, x3233, "stroke=\"orange\" stroke-dasharray=\"0.02 0.015\"", true);
        polylines(os, x4, "stroke=\"purple\" stroke-dasharray=\"0.02 0.015\"", true);
    }
    os << "  </g>\n";

    os << "  <g id=\"centers\">\n";
    const auto cc = centers::classical_centers(member);
    marker(os, cc.x3, "X3");
    marker(os, cc.x4, "X4");
    if (kiepert) {
        marker(os, kiepert->focus, "X110");
        marker(os, centers::x1511(member), "X1511");
        marker(os, centers::x74(member), "X74");
        marker(os, centers::parabola_vertex(*kiepert), "X3233");
    }
    os << "  </g>\n";

    if (has_eq && (cfg.f() + cfg.g()) != CPoint(0.0, 0.0)) {
        const CPoint s = family::stationary_x110_prediction(cfg);
        os << "  <text id=\"stationarity\" x=\"" << num(-1.55) << "\" y=\"" << num(1.5)
           << "\" font-size=\"0.07\" font-family=\"sans-serif\">X110 stationary at (" << num(s.real()) << ", "
           << num(s.imag()) << ")</text>\n";
    }
    os << "</svg>\n";
}

} // namespace poncelet::io
