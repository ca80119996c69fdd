#pragma once

/// \file
/// \brief Circle-inscribed Poncelet triangle families.
///
/// A family is fixed by the foci f, g of its caustic. The member at
/// parameter lambda (|lambda| = 1) has as vertices the roots of
///
///     z^3 - e1 z^2 + e2 z - e3,
///     e1 = f + g + lambda conj(f) conj(g),
///     e2 = f g + lambda (conj(f) + conj(g)),
///     e3 = lambda,
///
/// i.e. the preimages of lambda under the Blaschke product
/// z (z - f)(z - g) / ((1 - conj(f) z)(1 - conj(g) z)).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "poncelet/core.hpp"
#include "poncelet/geom_kernel.hpp"

namespace poncelet::family {

using geom::ConicQ;
using geom::EllipseG;
using geom::Triangle;

/// Point on the unit circle; projected onto it after a tolerance check.
class LambdaParam {
public:
    LambdaParam() = default;
    explicit LambdaParam(CPoint l, double tol = 1e-12)
    {
        require_finite(l, "LambdaParam");
        if (std::abs(std::abs(l) - 1.0) > tol)
            throw GeometryError("LambdaParam: |lambda| != 1");
        value_ = l / std::abs(l);
    }

    static LambdaParam from_phase(double phase) { return LambdaParam(std::polar(1.0, phase)); }

    CPoint value() const { return value_; }
    double phase() const { return wrap_phase(std::arg(value_)); }

private:
    CPoint value_{1.0, 0.0};
};

/// Lexicographic (re, then im) with ties in re resolved by im.
inline bool lex_less(CPoint a, CPoint b, double tol = 1e-12)
{
    if (std::abs(a.real() - b.real()) > tol)
        return a.real() < b.real();
    return a.imag() < b.imag();
}

class FamilyConfig {
public:
    FamilyConfig() = default;
    FamilyConfig(CPoint f, CPoint g) : f_(require_finite(f, "FamilyConfig")), g_(require_finite(g, "FamilyConfig"))
    {
        if (std::abs(f_) >= 1.0 || std::abs(g_) >= 1.0)
            throw GeometryError("focus outside unit disk");
    }

    CPoint f() const { return f_; }
    CPoint g() const { return g_; }

    /// Caustic center, the midpoint of the foci.
    CPoint center() const { return 0.5 * (f_ + g_); }

    /// Ellipse with foci f, g and major axis |1 - conj(f) g|.
    EllipseG caustic() const
    {
        const double a = 0.5 * std::abs(1.0 - std::conj(f_) * g_);
        // a^2 - |f - g|^2 / 4 = (1 - |f|^2)(1 - |g|^2) / 4
        const double b = 0.5 * std::sqrt((1.0 - std::norm(f_)) * (1.0 - std::norm(g_)));
        const double theta = std::abs(g_ - f_) > 0.0 ? wrap_angle(2.0 * std::arg(g_ - f_)) / 2.0 : 0.0;
        return EllipseG(center(), a, std::min(a, b), theta);
    }

    ConicQ caustic_conic() const { return caustic().to_conic(); }

    /// e1, e2, e3 of the member at lambda.
    std::array<CPoint, 3> symmetric_functions(CPoint lambda) const
    {
        const CPoint fc = std::conj(f_), gc = std::conj(g_);
        return {f_ + g_ + lambda * fc * gc, f_ * g_ + lambda * (fc + gc), lambda};
    }

private:
    CPoint f_{0.0, 0.0};
    CPoint g_{0.0, 0.0};
};

inline EllipseG caustic_of(const FamilyConfig& cfg) { return cfg.caustic(); }

inline CPoint principal_cbrt(CPoint z)
{
    if (z == CPoint(0.0, 0.0))
        return z;
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

/// Roots of z^3 - e1 z^2 + e2 z - e3: Cardano on the depressed cubic, then
/// one Newton step per root (kept only if it lowers the residual).
inline std::array<CPoint, 3> cubic_roots(CPoint e1, CPoint e2, CPoint e3)
{
    const auto poly = [&](CPoint z) { return ((z - e1) * z + e2) * z - e3; };
    const auto deriv = [&](CPoint z) { return (3.0 * z - 2.0 * e1) * z + e2; };

    const CPoint shift = e1 / 3.0;
    // z = t + shift  ->  t^3 + p t + q = 0
    const CPoint p = e2 - e1 * e1 / 3.0;
    const CPoint q = -2.0 * e1 * e1 * e1 / 27.0 + e1 * e2 / 3.0 - e3;

    const CPoint disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const CPoint c1 = -q / 2.0 + disc;
    const CPoint c2 = -q / 2.0 - disc;
    const CPoint u = principal_cbrt(std::abs(c1) >= std::abs(c2) ? c1 : c2);

    const CPoint w(-0.5, std::sqrt(3.0) / 2.0);
    std::array<CPoint, 3> roots;
    for (int k = 0; k < 3; ++k) {
        const CPoint wk = k == 0 ? CPoint(1.0, 0.0) : (k == 1 ? w : std::conj(w));
        CPoint t;
        if (std::abs(u) == 0.0)
            t = 0.0;
        else
            t = u * wk - p / (3.0 * u * wk);
        roots[k] = t + shift;
    }
    for (auto& z : roots) {
        const CPoint d = deriv(z);
        if (std::abs(d) == 0.0)
            continue;
        const CPoint polished = z - poly(z) / d;
        if (is_finite(polished) && std::abs(poly(polished)) <= std::abs(poly(z)))
            z = polished;
    }
    return roots;
}

/// Member at lambda with vertices ordered by argument in [0, 2pi), which is
/// counterclockwise for points on the unit circle.
inline Triangle triangle_at(const FamilyConfig& cfg, const LambdaParam& lambda)
{
    const auto [e1, e2, e3] = cfg.symmetric_functions(lambda.value());
    auto r = cubic_roots(e1, e2, e3);
    std::sort(r.begin(), r.end(), [](CPoint a, CPoint b) { return wrap_phase(std::arg(a)) < wrap_phase(std::arg(b)); });
    return Triangle(r[0], r[1], r[2]);
}

/// Relabels `next` so that its vertices are nearest to those of `prev`
/// (exhaustive over the six assignments).
inline Triangle match_vertices(const Triangle& prev, const Triangle& next)
{
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (int i = 0; i < 3; ++i)
            cost += std::norm(prev[i] - next[perm[i]]);
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Triangle::in_order({next[best[0]], next[best[1]], next[best[2]]}, next.degenerate());
}

/// |f + g| = |f g|, the division-free form of |1/f + 1/g| = 1.
inline bool contains_equilateral(const FamilyConfig& cfg, double tol = 1e-9)
{
    return std::abs(std::abs(cfg.f() + cfg.g()) - std::abs(cfg.f() * cfg.g())) <= tol;
}

/// lambda_o = -(f + g) / (conj(f) conj(g)), the parameter of the equilateral member.
inline LambdaParam equilateral_lambda(const FamilyConfig& cfg, double tol = 1e-9)
{
    const CPoint den = std::conj(cfg.f()) * std::conj(cfg.g());
    if (std::abs(den) == 0.0)
        throw GeometryError("equilateral_lambda: f g = 0");
    const CPoint lo = -(cfg.f() + cfg.g()) / den;
    if (std::abs(std::abs(lo) - 1.0) > tol)
        throw GeometryError("equilateral_lambda: family has no equilateral member (|lambda_o| != 1)");
    return LambdaParam(lo, tol);
}

/// Cube roots of lambda_o. When f = g = 0 every member is equilateral and the
/// roots of `fallback` are returned.
inline Triangle equilateral_vertices(const FamilyConfig& cfg, LambdaParam fallback = {}, double tol = 1e-9)
{
    LambdaParam lo = fallback;
    if (cfg.f() != CPoint(0.0, 0.0) || cfg.g() != CPoint(0.0, 0.0))
        lo = equilateral_lambda(cfg, tol);
    const double ph = lo.phase() / 3.0;
    return Triangle(std::polar(1.0, ph), std::polar(1.0, ph + kTwoPi / 3.0), std::polar(1.0, ph + 2.0 * kTwoPi / 3.0));
}

/// (1/f + 1/g)^{-1} = f g / (f + g)
inline CPoint stationary_x110_prediction(const FamilyConfig& cfg)
{
    const CPoint s = cfg.f() + cfg.g();
    if (std::abs(s) == 0.0)
        throw GeometryError("stationary_x110_prediction: f + g = 0");
    return cfg.f() * cfg.g() / s;
}

/// Signed barycentric coordinates of p with respect to t (sum to 1).
inline std::array<double, 3> barycentric_of(const Triangle& t, CPoint p)
{
    const double total = cross(t[1] - t[0], t[2] - t[0]);
    if (total == 0.0)
        throw GeometryError("barycentric_of: degenerate triangle");
    return {cross(t[1] - p, t[2] - p) / total, cross(t[2] - p, t[0] - p) / total, cross(t[0] - p, t[1] - p) / total};
}

/// Inconic of t centered at o. Its perspector is the isotomic conjugate of
/// the anticomplement of o; the inconic with perspector (p:q:r) is
/// sum (x/p)^2 - 2 sum xy/(pq) = 0 in barycentrics.
inline ConicQ inconic_with_center(const Triangle& t, CPoint o, double tol = kDegeneracyTol)
{
    t.require_nondegenerate("inconic_with_center");
    const auto bc = barycentric_of(t, o);
    Eigen::Vector3d a;
    for (int i = 0; i < 3; ++i) {
        a[i] = 1.0 - 2.0 * bc[i];
        if (a[i] <= tol)
            throw GeometryError("inconic not an ellipse: center outside the medial triangle");
    }
    const geom::Mat3 mb = 2.0 * geom::Mat3(a.cwiseProduct(a).asDiagonal()) - a * a.transpose();
    geom::Mat3 vert;
    vert << t[0].real(), t[1].real(), t[2].real(), t[0].imag(), t[1].imag(), t[2].imag(), 1.0, 1.0, 1.0;
    const geom::Mat3 to_bary = vert.inverse();
    return ConicQ(to_bary.transpose() * mb * to_bary);
}

inline std::pair<CPoint, CPoint> ordered_pair(CPoint a, CPoint b)
{
    if (lex_less(b, a))
        std::swap(a, b);
    return {a, b};
}

/// Family through t (inscribed in the unit circle) whose caustic is the
/// inconic of t centered at o. Foci come back in lexicographic order.
inline FamilyConfig config_from_triangle_and_center(const Triangle& t, CPoint o, double tol = kDegeneracyTol)
{
    for (const CPoint v : t.vertices())
        if (std::abs(std::abs(v) - 1.0) > 1e-9)
            throw GeometryError("config_from_triangle_and_center: triangle not inscribed in the unit circle");
    const auto shape = geom::conic_to_geometric(inconic_with_center(t, o, tol), tol);
    if (!std::holds_alternative<EllipseG>(shape))
        throw GeometryError("inconic not an ellipse");
    const auto [p, q] = std::get<EllipseG>(shape).foci();
    const auto [f, g] = ordered_pair(p, q);
    return FamilyConfig(f, g);
}

/// Family with caustic center o containing the equilateral with vertex a_eq:
/// f + g = 2 o and f g = -2 conj(o) a_eq^3.
inline FamilyConfig config_from_center_and_equilateral_vertex(CPoint o, CPoint a_eq)
{
    if (std::abs(std::abs(a_eq) - 1.0) > 1e-9)
        throw GeometryError("config_from_center_and_equilateral_vertex: A_eq not on the unit circle");
    const CPoint s = 2.0 * o;
    const CPoint p = -2.0 * std::conj(o) * a_eq * a_eq * a_eq;
    // z^2 - s z + p = 0, stable form
    const CPoint d = std::sqrt(s * s - 4.0 * p);
    const CPoint big = std::abs(s + d) >= std::abs(s - d) ? 0.5 * (s + d) : 0.5 * (s - d);
    CPoint f = big;
    CPoint g = std::abs(big) > 0.0 ? p / big : CPoint(0.0, 0.0);
    if (std::abs(f) >= 1.0 || std::abs(g) >= 1.0)
        throw GeometryError("no valid caustic: a focus lies outside the unit disk");
    std::tie(f, g) = ordered_pair(f, g);
    return FamilyConfig(f, g);
}

} // namespace poncelet::family
