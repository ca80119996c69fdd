#pragma once

/// \file
/// \brief Planar kernel: homogeneous lines, circles, conics as symmetric 3x3
/// matrices, pole/polar duality, reflections, rotations and triangles.
///
/// Every function here is a pure function of its arguments.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <variant>

#include <Eigen/Dense>

#include "poncelet/core.hpp"

namespace poncelet::geom {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

inline Vec3 homogeneous(CPoint p) { return {p.real(), p.imag(), 1.0}; }

/// Line l*x + m*y + n = 0, defined up to a nonzero scale.
struct HLine {
    double l = 0.0;
    double m = 0.0;
    double n = 0.0;

    HLine() = default;
    HLine(double l_, double m_, double n_) : l(l_), m(m_), n(n_)
    {
        if (std::hypot(l, m) == 0.0 || !std::isfinite(l) || !std::isfinite(m) || !std::isfinite(n))
            throw GeometryError("HLine: (l, m) must be nonzero and finite");
    }

    static HLine from_vector(const Vec3& v) { return HLine(v[0], v[1], v[2]); }

    static HLine through(CPoint a, CPoint b)
    {
        if (std::abs(b - a) == 0.0)
            throw GeometryError("HLine::through: coincident points");
        const CPoint d = b - a;
        return HLine(-d.imag(), d.real(), d.imag() * a.real() - d.real() * a.imag()).normalized();
    }

    static HLine through_with_direction(CPoint p, CPoint dir) { return through(p, p + dir); }

    /// Representative with l^2 + m^2 = 1 and (l > 0, or l == 0 and m > 0).
    HLine normalized() const
    {
        double s = std::hypot(l, m);
        if (l < 0.0 || (l == 0.0 && m < 0.0))
            s = -s;
        HLine out;
        out.l = l / s;
        out.m = m / s;
        out.n = n / s;
        return out;
    }

    Vec3 vector() const { return {l, m, n}; }
    CPoint normal() const { return CPoint(l, m) / std::hypot(l, m); }
    CPoint direction() const { return CPoint(-m, l) / std::hypot(l, m); }

    double signed_distance(CPoint p) const { return (l * p.real() + m * p.imag() + n) / std::hypot(l, m); }
    double distance(CPoint p) const { return std::abs(signed_distance(p)); }

    CPoint project(CPoint p) const { return p - signed_distance(p) * normal(); }
};

struct CircleG {
    CPoint center{0.0, 0.0};
    double radius = 1.0;

    CircleG() = default;
    CircleG(CPoint c, double r) : center(require_finite(c, "CircleG")), radius(r)
    {
        if (!(r > 0.0) || !std::isfinite(r))
            throw GeometryError("CircleG: radius must be positive");
    }

    static CircleG unit() { return {}; }
};

inline double frobenius(const Mat3& m) { return m.norm(); }

/// Projective conic x^T Q x = 0 with Q symmetric, stored normalized to unit
/// Frobenius norm with its largest-magnitude entry positive.
class ConicQ {
public:
    explicit ConicQ(const Mat3& m) : m_(normalize(0.5 * (m + m.transpose()))) {}

    /// a x^2 + b xy + c y^2 + d x + e y + f = 0
    static ConicQ from_coefficients(double a, double b, double c, double d, double e, double f)
    {
        Mat3 m;
        m << a, b / 2, d / 2, b / 2, c, e / 2, d / 2, e / 2, f;
        return ConicQ(m);
    }

    static ConicQ from_circle(const CircleG& c)
    {
        const double cx = c.center.real();
        const double cy = c.center.imag();
        Mat3 m;
        m << 1, 0, -cx, 0, 1, -cy, -cx, -cy, cx * cx + cy * cy - c.radius * c.radius;
        return ConicQ(m);
    }

    const Mat3& matrix() const { return m_; }

    double determinant() const { return m_.determinant(); }
    bool is_degenerate(double tol = kDegeneracyTol) const { return std::abs(determinant()) < tol; }

    /// Scale-free value of the conic form at p (homogeneous vector normalized).
    double residual(CPoint p) const
    {
        Vec3 v = homogeneous(p);
        v.normalize();
        return v.dot(m_ * v);
    }

private:
    static Mat3 normalize(const Mat3& m)
    {
        const double n = frobenius(m);
        if (!(n > 0.0) || !std::isfinite(n))
            throw GeometryError("ConicQ: zero or non-finite matrix");
        Mat3 out = m / n;
        double big = 0.0;
        for (int i = 0; i < 9; ++i)
            big = std::max(big, std::abs(out(i / 3, i % 3)));
        for (int i = 0; i < 9; ++i) {
            const double v = out(i / 3, i % 3);
            if (std::abs(v) >= big * (1.0 - 1e-12)) {
                if (v < 0.0)
                    out = -out;
                break;
            }
        }
        return out;
    }

    Mat3 m_;
};

/// Distance between two conics as matrices up to scale (sign-insensitive).
inline double proportionality_residual(const ConicQ& a, const ConicQ& b)
{
    return std::min((a.matrix() - b.matrix()).norm(), (a.matrix() + b.matrix()).norm());
}

inline Mat3 adjugate(const Mat3& m)
{
    Mat3 adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return adj;
}

struct EllipseG {
    CPoint center{0.0, 0.0};
    double a = 1.0; ///< semi-major
    double b = 1.0; ///< semi-minor
    double theta = 0.0; ///< major-axis direction, radians

    EllipseG() = default;
    EllipseG(CPoint c, double a_, double b_, double th) : center(require_finite(c, "EllipseG")), a(a_), b(b_), theta(th)
    {
        if (!(b > 0.0) || !(a >= b) || !std::isfinite(a))
            throw GeometryError("EllipseG: need a >= b > 0");
    }

    double focal_distance() const { return std::sqrt(std::max(0.0, a * a - b * b)); }

    std::pair<CPoint, CPoint> foci() const
    {
        const CPoint off = std::polar(focal_distance(), theta);
        return {center - off, center + off};
    }

    CPoint point_at(double t) const
    {
        return center + std::polar(1.0, theta) * CPoint(a * std::cos(t), b * std::sin(t));
    }

    ConicQ to_conic() const
    {
        const double c = std::cos(theta), s = std::sin(theta);
        // Quadratic form R diag(1/a^2, 1/b^2) R^T around the center.
        Eigen::Matrix2d r;
        r << c, -s, s, c;
        Eigen::Matrix2d d = Eigen::Vector2d(1.0 / (a * a), 1.0 / (b * b)).asDiagonal();
        const Eigen::Matrix2d q = r * d * r.transpose();
        const Eigen::Vector2d x0(center.real(), center.imag());
        const Eigen::Vector2d lin = -q * x0;
        Mat3 m;
        m.topLeftCorner<2, 2>() = q;
        m.topRightCorner<2, 1>() = lin;
        m.bottomLeftCorner<1, 2>() = lin.transpose();
        m(2, 2) = x0.dot(q * x0) - 1.0;
        return ConicQ(m);
    }
};

struct ParabolaG {
    CPoint focus{0.0, 0.0};
    HLine directrix;

    ParabolaG() = default;
    ParabolaG(CPoint f, HLine d) : focus(require_finite(f, "ParabolaG")), directrix(d.normalized())
    {
        if (directrix.distance(focus) <= kDegeneracyTol)
            throw GeometryError("ParabolaG: focus lies on directrix");
    }

    /// |X - F|^2 - dist(X, directrix)^2 = 0
    ConicQ to_conic() const
    {
        const HLine d = directrix.normalized();
        const Vec3 dl = d.vector();
        Mat3 m = Mat3::Zero();
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        m(0, 2) = m(2, 0) = -focus.real();
        m(1, 2) = m(2, 1) = -focus.imag();
        m(2, 2) = std::norm(focus);
        m -= dl * dl.transpose();
        return ConicQ(m);
    }
};

enum class ConicKind { ellipse, parabola, hyperbola, imaginary, degenerate };

inline const char* to_string(ConicKind k)
{
    switch (k) {
    case ConicKind::ellipse: return "ellipse";
    case ConicKind::parabola: return "parabola";
    case ConicKind::hyperbola: return "hyperbola";
    case ConicKind::imaginary: return "imaginary";
    case ConicKind::degenerate: return "degenerate";
    }
    return "unknown";
}

using ConicShape = std::variant<EllipseG, ParabolaG, ConicKind>;

inline ConicKind kind_of(const ConicShape& s)
{
    if (std::holds_alternative<EllipseG>(s))
        return ConicKind::ellipse;
    if (std::holds_alternative<ParabolaG>(s))
        return ConicKind::parabola;
    return std::get<ConicKind>(s);
}

/// Center, axes and rotation of an ellipse, or focus/directrix of a parabola,
/// from the conic matrix. Other classes come back as a tag only.
inline ConicShape conic_to_geometric(const ConicQ& conic, double tol = kDegeneracyTol)
{
    Mat3 m = conic.matrix();
    if (std::abs(m.determinant()) < tol)
        return ConicKind::degenerate;

    Eigen::Matrix2d s = m.topLeftCorner<2, 2>();
    const double det2 = s.determinant();
    Eigen::Vector2d lin = m.topRightCorner<2, 1>();

    if (std::abs(det2) <= tol) {
        const double k = s.trace();
        s /= k;
        lin /= k;
        const double c = m(2, 2) / k;
        // s = t t^T with t along the directrix.
        const double th = 0.5 * std::atan2(2.0 * s(0, 1), s(0, 0) - s(1, 1));
        const Eigen::Vector2d axis(-std::sin(th), std::cos(th));
        const double bn = lin.dot(axis);
        if (std::abs(bn) <= tol)
            return ConicKind::degenerate;
        const double dd = (c - lin.squaredNorm()) / (2.0 * bn);
        const Eigen::Vector2d f = -lin - dd * axis;
        return ParabolaG(CPoint(f[0], f[1]), HLine(axis[0], axis[1], dd));
    }
    if (det2 < 0.0)
        return ConicKind::hyperbola;

    if (s.trace() < 0.0) {
        m = -m;
        s = -s;
        lin = -lin;
    }
    const Eigen::Vector2d x0 = -s.inverse() * lin;
    const double c0 = m(2, 2) + lin.dot(x0);
    if (c0 >= 0.0)
        return ConicKind::imaginary;

    const double mean = 0.5 * (s(0, 0) + s(1, 1));
    const double half = std::hypot(0.5 * (s(0, 0) - s(1, 1)), s(0, 1));
    const double lam_small = mean - half;
    const double lam_big = mean + half;
    const double a = std::sqrt(-c0 / lam_small);
    const double b = std::sqrt(-c0 / lam_big);
    double theta = 0.0;
    if (half > tol * std::abs(mean))
        theta = wrap_angle(2.0 * (0.5 * std::atan2(2.0 * s(0, 1), s(0, 0) - s(1, 1)) + kPi / 2)) / 2.0;
    return EllipseG(CPoint(x0[0], x0[1]), a, std::min(a, b), theta);
}

inline std::pair<CPoint, CPoint> foci_of_ellipse(const EllipseG& e) { return e.foci(); }

inline CPoint reflect_point_in_line(CPoint p, const HLine& line)
{
    return p - 2.0 * line.signed_distance(p) * line.normal();
}

/// Reflection of a whole line about another.
inline HLine reflect_line_in_line(const HLine& subject, const HLine& mirror)
{
    const CPoint p = subject.project(CPoint(0.0, 0.0));
    const CPoint q = p + subject.direction();
    return HLine::through(reflect_point_in_line(p, mirror), reflect_point_in_line(q, mirror));
}

inline CPoint rotate_about(CPoint p, CPoint c, double theta) { return c + std::polar(1.0, theta) * (p - c); }

/// Line through `vertex` perpendicular to the internal bisector of the angle
/// p-vertex-q.
inline HLine external_bisector(CPoint vertex, CPoint p, CPoint q, double tol = kDegeneracyTol)
{
    const double lp = std::abs(p - vertex);
    const double lq = std::abs(q - vertex);
    if (lp <= tol || lq <= tol)
        throw GeometryError("external_bisector: arm coincides with vertex");
    const CPoint dir = (p - vertex) / lp - (q - vertex) / lq;
    if (std::abs(dir) <= tol)
        throw GeometryError("external_bisector: arms lie on the same ray");
    return HLine::through_with_direction(vertex, dir);
}

inline HLine polar_line(CPoint p, const ConicQ& c, double tol = kDegeneracyTol)
{
    if (c.is_degenerate(tol))
        throw GeometryError("polar_line: degenerate conic");
    const Vec3 v = c.matrix() * homogeneous(p);
    if (std::hypot(v[0], v[1]) <= tol * v.norm())
        throw GeometryError("polar_line: polar is the line at infinity");
    return HLine::from_vector(v);
}

inline CPoint pole(const HLine& line, const ConicQ& c, double tol = kDegeneracyTol)
{
    if (c.is_degenerate(tol))
        throw GeometryError("pole: degenerate conic");
    const Vec3 v = adjugate(c.matrix()) * line.vector();
    if (std::abs(v[2]) <= tol * v.norm())
        throw GeometryError("pole: pole at infinity");
    return {v[0] / v[2], v[1] / v[2]};
}

/// Conic enveloped by the polars (w.r.t. `wrt`) of the points of `c`.
inline ConicQ polar_image_of_conic(const ConicQ& c, const CircleG& wrt, double tol = kDegeneracyTol)
{
    if (c.is_degenerate(tol))
        throw GeometryError("polar_image_of_conic: degenerate conic");
    const Mat3 d = ConicQ::from_circle(wrt).matrix();
    return ConicQ(d * adjugate(c.matrix()) * d);
}

/// L adj(C) L^T with L normalized to l^2 + m^2 = 1 and C at unit Frobenius
/// norm. Zero iff L is tangent to C; positive means L misses a real ellipse.
inline double line_conic_tangency_residual(const HLine& line, const ConicQ& c)
{
    const Vec3 l = line.normalized().vector();
    const Mat3 adj = adjugate(c.matrix());
    const double s = adj(2, 2) >= 0.0 ? 1.0 : -1.0;
    return s * l.dot(adj * l);
}

/// Exit point of the ray origin -> through on the circle.
inline CPoint ray_circle_intersection(CPoint origin, CPoint through, const CircleG& circle, double tol = kDegeneracyTol)
{
    const double len = std::abs(through - origin);
    if (len <= tol)
        throw GeometryError("ray_circle_intersection: degenerate ray");
    const CPoint d = (through - origin) / len;
    const CPoint w = origin - circle.center;
    const double bh = dot(d, w);
    const double c = std::norm(w) - circle.radius * circle.radius;
    const double disc = bh * bh - c;
    if (disc < 0.0)
        throw GeometryError("ray_circle_intersection: ray misses circle");
    const double t = -bh + std::sqrt(disc);
    if (t <= 0.0)
        throw GeometryError("ray_circle_intersection: ray misses circle");
    return origin + t * d;
}

inline std::optional<CPoint> intersect(const HLine& a, const HLine& b, double tol = kDegeneracyTol)
{
    const Vec3 x = a.normalized().vector().cross(b.normalized().vector());
    if (std::abs(x[2]) <= tol)
        return std::nullopt;
    return CPoint(x[0] / x[2], x[1] / x[2]);
}

/// Three vertices stored counterclockwise. Side i is opposite vertex i.
class Triangle {
public:
    Triangle() = default;
    Triangle(CPoint a, CPoint b, CPoint c, double tol = kDegeneracyTol)
        : v_{require_finite(a, "Triangle"), require_finite(b, "Triangle"), require_finite(c, "Triangle")}
    {
        if (cross(v_[1] - v_[0], v_[2] - v_[0]) < 0.0)
            std::swap(v_[1], v_[2]);
        const double scale = std::max({std::abs(v_[1] - v_[0]), std::abs(v_[2] - v_[1]), std::abs(v_[0] - v_[2])});
        degenerate_ = !(area() > tol * scale * scale);
    }

    /// Keeps the given vertex order (no orientation fix-up). Used to relabel
    /// vertices while tracking a family.
    static Triangle in_order(std::array<CPoint, 3> v, bool degenerate)
    {
        Triangle t;
        t.v_ = v;
        t.degenerate_ = degenerate;
        return t;
    }

    CPoint operator[](std::size_t i) const { return v_[i]; }
    const std::array<CPoint, 3>& vertices() const { return v_; }
    bool degenerate() const { return degenerate_; }

    double signed_area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }
    double area() const { return std::abs(signed_area()); }

    double side(std::size_t i) const { return std::abs(v_[(i + 1) % 3] - v_[(i + 2) % 3]); }
    std::array<double, 3> sides() const { return {side(0), side(1), side(2)}; }

    HLine sideline(std::size_t i) const { return HLine::through(v_[(i + 1) % 3], v_[(i + 2) % 3]); }

    /// (max side - min side) / max side
    double relative_side_spread() const
    {
        const auto s = sides();
        const auto [lo, hi] = std::minmax({s[0], s[1], s[2]});
        return hi > 0.0 ? (hi - lo) / hi : 0.0;
    }

    void require_nondegenerate(const char* what) const
    {
        if (degenerate_)
            throw GeometryError(std::string(what) + ": degenerate triangle");
    }

private:
    std::array<CPoint, 3> v_{};
    bool degenerate_ = true;
};

inline double cyclic_orientation_sign(const Triangle& t) { return t.signed_area() >= 0.0 ? 1.0 : -1.0; }

} // namespace poncelet::geom
