#pragma once

/// \file
/// \brief The handful of Kimberling centers used by the experiments, the
/// Euler line, the Kiepert parabola, and contact/tangential triangles.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/core.hpp"
#include "poncelet/geom_kernel.hpp"

namespace poncelet::centers {

using geom::CircleG;
using geom::HLine;
using geom::ParabolaG;
using geom::Triangle;

enum class CenterIndex { X1, X2, X3, X4, X5, X11, X65, X74, X110, X1511, X3233 };

inline constexpr std::array<CenterIndex, 11> kAllCenters{CenterIndex::X1,   CenterIndex::X2,   CenterIndex::X3,
                                                         CenterIndex::X4,   CenterIndex::X5,   CenterIndex::X11,
                                                         CenterIndex::X65,  CenterIndex::X74,  CenterIndex::X110,
                                                         CenterIndex::X1511, CenterIndex::X3233};

inline std::string_view to_string(CenterIndex c)
{
    switch (c) {
    case CenterIndex::X1: return "X1";
    case CenterIndex::X2: return "X2";
    case CenterIndex::X3: return "X3";
    case CenterIndex::X4: return "X4";
    case CenterIndex::X5: return "X5";
    case CenterIndex::X11: return "X11";
    case CenterIndex::X65: return "X65";
    case CenterIndex::X74: return "X74";
    case CenterIndex::X110: return "X110";
    case CenterIndex::X1511: return "X1511";
    case CenterIndex::X3233: return "X3233";
    }
    return "?";
}

/// Accepts "X110" or "110" (case-insensitive X).
inline std::optional<CenterIndex> parse_center(std::string_view s)
{
    if (!s.empty() && (s.front() == 'X' || s.front() == 'x'))
        s.remove_prefix(1);
    for (CenterIndex c : kAllCenters)
        if (to_string(c).substr(1) == s)
            return c;
    return std::nullopt;
}

/// Homogeneous barycentric coordinates.
struct BaryCoords {
    double u = 0.0, v = 0.0, w = 0.0;

    CPoint to_cartesian(const Triangle& t) const
    {
        const double s = u + v + w;
        if (s == 0.0 || !std::isfinite(s))
            throw GeometryError("BaryCoords: point at infinity");
        return (u * t[0] + v * t[1] + w * t[2]) / s;
    }
};

struct ClassicalCenters {
    CPoint x1, x2, x3, x4, x5;
};

inline CPoint circumcenter(const Triangle& t)
{
    t.require_nondegenerate("circumcenter");
    const CPoint b = t[1] - t[0];
    const CPoint c = t[2] - t[0];
    const double d = 2.0 * cross(b, c);
    const CPoint o(c.imag() * std::norm(b) - b.imag() * std::norm(c), b.real() * std::norm(c) - c.real() * std::norm(b));
    return t[0] + o / d;
}

inline CircleG circumcircle(const Triangle& t)
{
    const CPoint o = circumcenter(t);
    return {o, std::abs(t[0] - o)};
}

inline CPoint incenter(const Triangle& t)
{
    t.require_nondegenerate("incenter");
    const auto s = t.sides();
    return (s[0] * t[0] + s[1] * t[1] + s[2] * t[2]) / (s[0] + s[1] + s[2]);
}

inline double inradius(const Triangle& t)
{
    const auto s = t.sides();
    return 2.0 * t.area() / (s[0] + s[1] + s[2]);
}

inline ClassicalCenters classical_centers(const Triangle& t)
{
    t.require_nondegenerate("classical_centers");
    ClassicalCenters c;
    c.x2 = (t[0] + t[1] + t[2]) / 3.0;
    c.x3 = circumcenter(t);
    c.x4 = t[0] + t[1] + t[2] - 2.0 * c.x3;
    c.x5 = 0.5 * (c.x3 + c.x4);
    c.x1 = incenter(t);
    return c;
}

inline bool is_equilateral(const Triangle& t, double tol = kDegeneracyTol) { return t.relative_side_spread() <= tol; }

/// All angles strictly below pi/2.
inline bool is_acute(const Triangle& t)
{
    const auto s = t.sides();
    for (int i = 0; i < 3; ++i) {
        const double a2 = s[i] * s[i];
        const double rest = s[(i + 1) % 3] * s[(i + 1) % 3] + s[(i + 2) % 3] * s[(i + 2) % 3];
        if (a2 >= rest)
            return false;
    }
    return true;
}

/// Relative threshold below which |b^2 - c^2| counts as isosceles for X110.
inline constexpr double kIsoscelesRelTol = 1e-7;

/// Focus of the Kiepert parabola, barycentrics a^2/(b^2-c^2) : b^2/(c^2-a^2) : c^2/(a^2-b^2).
/// Near an isosceles triangle the apex (the limit point) is returned.
inline CPoint x110(const Triangle& t, double tol = kDegeneracyTol)
{
    t.require_nondegenerate("x110");
    if (is_equilateral(t, tol))
        throw GeometryError("X110 undefined for an equilateral triangle");
    const auto s = t.sides();
    const std::array<double, 3> sq{s[0] * s[0], s[1] * s[1], s[2] * s[2]};
    std::array<double, 3> diff;
    for (int i = 0; i < 3; ++i)
        diff[i] = sq[(i + 1) % 3] - sq[(i + 2) % 3];

    const double scale = std::cbrt(s[0] * s[1] * s[2]);
    const double thresh = kIsoscelesRelTol * scale * scale;
    const auto smallest = static_cast<std::size_t>(
        std::min_element(diff.begin(), diff.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }) -
        diff.begin());
    if (std::abs(diff[smallest]) < thresh)
        return t[smallest];

    return BaryCoords{sq[0] / diff[0], sq[1] / diff[1], sq[2] / diff[2]}.to_cartesian(t);
}

/// Line X2 X3.
inline HLine euler_line(const Triangle& t, double tol = kDegeneracyTol)
{
    const auto c = classical_centers(t);
    const double scale = std::max({t.side(0), t.side(1), t.side(2)});
    if (std::abs(c.x2 - c.x3) <= tol * scale)
        throw GeometryError("euler_line: undefined for an equilateral triangle");
    return HLine::through(c.x2, c.x3);
}

inline ParabolaG kiepert_parabola(const Triangle& t, double tol = kDegeneracyTol)
{
    return ParabolaG(x110(t, tol), euler_line(t, tol));
}

/// Midpoint of the focus and its foot on the directrix.
inline CPoint parabola_vertex(const ParabolaG& p) { return 0.5 * (p.focus + p.directrix.project(p.focus)); }

inline CPoint x1511(const Triangle& t, double tol = kDegeneracyTol) { return 0.5 * (circumcenter(t) + x110(t, tol)); }

/// Antipode of X110 on the circumcircle.
inline CPoint x74(const Triangle& t, double tol = kDegeneracyTol) { return 2.0 * circumcenter(t) - x110(t, tol); }

inline CPoint x3233(const Triangle& t, double tol = kDegeneracyTol) { return parabola_vertex(kiepert_parabola(t, tol)); }

/// Incircle touch points; vertex i lies on side i.
inline Triangle contact_triangle(const Triangle& t)
{
    t.require_nondegenerate("contact_triangle");
    const auto s = t.sides();
    const double semi = 0.5 * (s[0] + s[1] + s[2]);
    std::array<CPoint, 3> out;
    for (int i = 0; i < 3; ++i) {
        const CPoint from = t[(i + 1) % 3];
        const CPoint to = t[(i + 2) % 3];
        // distance from vertex i+1 to the touch point on side i is semi - side(i+1)
        out[i] = from + (semi - s[(i + 1) % 3]) * (to - from) / s[i];
    }
    return Triangle(out[0], out[1], out[2]);
}

/// Triangle bounded by the tangents to `circle` at the vertices of t; vertex
/// i is where the tangents at the other two vertices meet.
inline Triangle tangential_triangle(const Triangle& t, const CircleG& circle, double tol = kDegeneracyTol)
{
    std::array<CPoint, 3> u;
    for (int i = 0; i < 3; ++i)
        u[i] = (t[i] - circle.center) / circle.radius;
    std::array<CPoint, 3> out;
    for (int i = 0; i < 3; ++i) {
        const CPoint a = u[(i + 1) % 3];
        const CPoint b = u[(i + 2) % 3];
        if (std::abs(a + b) <= tol)
            throw GeometryError("tangential degenerate: antipodal vertices");
        out[i] = circle.center + circle.radius * (2.0 * a * b / (a + b));
    }
    return Triangle(out[0], out[1], out[2]);
}

inline Triangle tangential_triangle(const Triangle& t) { return tangential_triangle(t, circumcircle(t)); }

/// Tangency point of the incircle and the nine-point circle.
inline CPoint x11_feuerbach(const Triangle& t, double tol = kDegeneracyTol)
{
    const auto c = classical_centers(t);
    const double r = std::abs(t[0] - c.x3);
    const CPoint d = c.x1 - c.x5;
    if (std::abs(d) <= tol * r)
        throw GeometryError("X11 undefined: incircle and nine-point circle are concentric");
    return c.x5 + 0.5 * r * d / std::abs(d);
}

/// Orthocenter of the contact triangle.
inline CPoint x65(const Triangle& t) { return classical_centers(contact_triangle(t)).x4; }

inline CPoint center_of(const Triangle& t, CenterIndex idx, double tol = kDegeneracyTol)
{
    switch (idx) {
    case CenterIndex::X1: return incenter(t);
    case CenterIndex::X2: return classical_centers(t).x2;
    case CenterIndex::X3: return circumcenter(t);
    case CenterIndex::X4: return classical_centers(t).x4;
    case CenterIndex::X5: return classical_centers(t).x5;
    case CenterIndex::X11: return x11_feuerbach(t, tol);
    case CenterIndex::X65: return x65(t);
    case CenterIndex::X74: return x74(t, tol);
    case CenterIndex::X110: return x110(t, tol);
    case CenterIndex::X1511: return x1511(t, tol);
    case CenterIndex::X3233: return x3233(t, tol);
    }
    throw GeometryError("center_of: unknown index");
}

/// Centers whose construction breaks down on isosceles or equilateral triangles.
inline bool singular_on_isosceles(CenterIndex idx)
{
    switch (idx) {
    case CenterIndex::X11:
    case CenterIndex::X74:
    case CenterIndex::X110:
    case CenterIndex::X1511:
    case CenterIndex::X3233: return true;
    default: return false;
    }
}

} // namespace poncelet::centers
