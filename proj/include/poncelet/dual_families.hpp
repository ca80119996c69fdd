#pragma once

/// \file
/// \brief Tangential (polar) families of a circle-inscribed Poncelet family
/// and equilateral-member search over a one-parameter family.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "poncelet/core.hpp"
#include "poncelet/family.hpp"
#include "poncelet/geom_kernel.hpp"
#include "poncelet/tri_centers.hpp"

namespace poncelet::dual {

using family::FamilyConfig;
using family::LambdaParam;
using geom::ConicQ;
using geom::Triangle;

struct DualFamilySample {
    LambdaParam lambda;
    Triangle reference;
    std::optional<Triangle> tangential; ///< empty when the reference has antipodal vertices
    ConicQ outer_conic;
    double max_vertex_residual = 0.0; ///< of tangential vertices on outer_conic

    bool degenerate() const { return !tangential.has_value(); }
};

/// Polar image of the caustic with respect to the unit circle; the tangential
/// family is inscribed in it.
inline ConicQ outer_conic(const FamilyConfig& cfg)
{
    return geom::polar_image_of_conic(cfg.caustic_conic(), geom::CircleG::unit());
}

inline DualFamilySample tangential_family_at(const FamilyConfig& cfg, const LambdaParam& lambda,
                                             double tol = kDegeneracyTol)
{
    DualFamilySample s{lambda, family::triangle_at(cfg, lambda), std::nullopt, outer_conic(cfg), 0.0};
    try {
        s.tangential = centers::tangential_triangle(s.reference, geom::CircleG::unit(), tol);
    } catch (const GeometryError&) {
        return s;
    }
    for (const CPoint v : s.tangential->vertices())
        s.max_vertex_residual = std::max(s.max_vertex_residual, std::abs(s.outer_conic.residual(v)));
    return s;
}

struct EquilateralSearch {
    bool found = false;
    double phase = 0.0;
    double min_spread = std::numeric_limits<double>::infinity();
};

/// Relative side-length spread along a family; infinity where undefined.
using SpreadFn = std::function<double(double phase)>;

/// Coarse scan of `samples` phases, then golden-section refinement around
/// every coarse local minimum down to `phase_tol`.
inline EquilateralSearch search_min_spread(const SpreadFn& spread, int samples = 720, double threshold = 1e-6,
                                           double phase_tol = 1e-12)
{
    std::vector<double> coarse(static_cast<std::size_t>(samples));
    const double h = kTwoPi / samples;
    for (int k = 0; k < samples; ++k)
        coarse[static_cast<std::size_t>(k)] = spread(k * h);

    EquilateralSearch best;
    const auto at = [&](int k) { return coarse[static_cast<std::size_t>((k % samples + samples) % samples)]; };
    for (int k = 0; k < samples; ++k) {
        const double v = at(k);
        if (v < best.min_spread) {
            best.min_spread = v;
            best.phase = k * h;
        }
        if (!std::isfinite(v) || v > at(k - 1) || v > at(k + 1))
            continue;
        double lo = (k - 1) * h, hi = (k + 1) * h;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = spread(x1), f2 = spread(x2);
        while (hi - lo > phase_tol) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = spread(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = spread(x2);
            }
        }
        const double xm = 0.5 * (lo + hi);
        const double fm = spread(xm);
        if (fm < best.min_spread) {
            best.min_spread = fm;
            best.phase = wrap_phase(xm);
        }
    }
    best.found = best.min_spread < threshold;
    return best;
}

inline EquilateralSearch search_tangential_equilateral(const FamilyConfig& cfg, int samples = 720,
                                                       double threshold = 1e-6)
{
    const auto spread = [&](double phase) {
        const Triangle ref = family::triangle_at(cfg, LambdaParam::from_phase(phase));
        try {
            return centers::tangential_triangle(ref, geom::CircleG::unit()).relative_side_spread();
        } catch (const GeometryError&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    return search_min_spread(spread, samples, threshold);
}

/// Whether the tangential family contains an equilateral member, found by
/// search (no use of the closed-form criterion).
inline bool dual_contains_equilateral(const FamilyConfig& cfg, int samples = 720, double threshold = 1e-6)
{
    return search_tangential_equilateral(cfg, samples, threshold).found;
}

} // namespace poncelet::dual
