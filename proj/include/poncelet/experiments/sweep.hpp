#pragma once

/// \file
/// \brief Uniform lambda-phase sweeps of a family with per-sample centers.
///
/// Samples are computed independently (optionally on several threads) and
/// then relabeled sequentially so vertices move continuously; the result is
/// identical for any worker count.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "poncelet/core.hpp"
#include "poncelet/family.hpp"
#include "poncelet/geom_kernel.hpp"
#include "poncelet/tri_centers.hpp"

namespace poncelet::experiments {

using centers::CenterIndex;
using family::FamilyConfig;
using family::LambdaParam;
using geom::Triangle;

enum class FamilyKind { reference, tangential };

inline const char* to_string(FamilyKind k) { return k == FamilyKind::reference ? "reference" : "tangential"; }

/// Radius, in lambda phase, of the window excluded around isosceles members.
inline constexpr double kIsoscelesWindow = 1e-3;

namespace flags {
inline constexpr unsigned degenerate = 1u;
inline constexpr unsigned obtuse = 2u;   ///< tangential family: reference member is not acute
inline constexpr unsigned excluded = 4u; ///< inside an isosceles window
inline constexpr unsigned singular = 8u; ///< a requested center could not be computed
} // namespace flags

inline std::vector<std::string> flag_names(unsigned f)
{
    std::vector<std::string> out;
    if (f & flags::degenerate)
        out.emplace_back("degenerate");
    if (f & flags::obtuse)
        out.emplace_back("skipped_obtuse");
    if (f & flags::excluded)
        out.emplace_back("excluded_window");
    if (f & flags::singular)
        out.emplace_back("singular");
    return out;
}

struct SweepSample {
    double phase = 0.0;
    Triangle triangle;
    std::map<CenterIndex, CPoint> centers;
    unsigned flags = 0;

    bool usable() const { return flags == 0; }
};

struct ExcludedWindow {
    double phase = 0.0;
    double radius = kIsoscelesWindow;
    std::string reason;
};

struct SweepResult {
    FamilyConfig cfg;
    FamilyKind kind = FamilyKind::reference;
    std::vector<CenterIndex> centers;
    std::vector<SweepSample> samples;
    std::vector<ExcludedWindow> windows;

    /// Points of `c` over samples with no flags set.
    std::vector<CPoint> points(CenterIndex c) const
    {
        std::vector<CPoint> out;
        for (const auto& s : samples) {
            if (!s.usable())
                continue;
            if (auto it = s.centers.find(c); it != s.centers.end())
                out.push_back(it->second);
        }
        return out;
    }
};

struct SweepOptions {
    FamilyKind kind = FamilyKind::reference;
    int workers = 1;
    double tol = kDegeneracyTol;
};

namespace detail {

/// (a^2-b^2)(b^2-c^2)(c^2-a^2) / scale^6, zero exactly on isosceles members.
inline double isosceles_indicator(const Triangle& t)
{
    const auto s = t.sides();
    const double a = s[0] * s[0], b = s[1] * s[1], c = s[2] * s[2];
    const double scale = (a + b + c) / 3.0;
    return (a - b) * (b - c) * (c - a) / (scale * scale * scale);
}

} // namespace detail

/// Phases of the isosceles members, by sign changes of the isosceles
/// indicator along a vertex-tracked scan followed by bisection. Empty when
/// every member is equilateral.
inline std::vector<double> isosceles_phases(const FamilyConfig& cfg, int scan = 4096)
{
    std::vector<double> out;
    const double h = kTwoPi / scan;
    Triangle prev = family::triangle_at(cfg, LambdaParam::from_phase(0.0));
    double prev_val = detail::isosceles_indicator(prev);
    double max_spread = prev.relative_side_spread();
    for (int k = 1; k <= scan; ++k) {
        const double ph = k * h;
        Triangle cur = family::match_vertices(prev, family::triangle_at(cfg, LambdaParam::from_phase(ph)));
        max_spread = std::max(max_spread, cur.relative_side_spread());
        const double val = detail::isosceles_indicator(cur);
        if (prev_val == 0.0) {
            out.push_back(wrap_phase(ph - h));
        } else if ((prev_val < 0.0) != (val < 0.0) && val != 0.0) {
            double lo = ph - h, hi = ph;
            double flo = prev_val;
            Triangle tlo = prev;
            for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Triangle tm = family::match_vertices(tlo, family::triangle_at(cfg, LambdaParam::from_phase(mid)));
                const double fm = detail::isosceles_indicator(tm);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                    tlo = tm;
                } else {
                    hi = mid;
                }
            }
            out.push_back(wrap_phase(0.5 * (lo + hi)));
        }
        prev = cur;
        prev_val = val;
    }
    if (max_spread < 1e-9)
        return {};
    std::sort(out.begin(), out.end());
    return out;
}

inline double circular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

/// N uniform lambda phases 2 pi k / N with the requested centers.
inline SweepResult sweep(const FamilyConfig& cfg, int n, const std::vector<CenterIndex>& wanted,
                         const SweepOptions& opt = {})
{
    if (n < 16)
        throw std::invalid_argument("sweep: need at least 16 samples");

    SweepResult res;
    res.cfg = cfg;
    res.kind = opt.kind;
    res.centers = wanted;

    const bool any_singular = std::any_of(wanted.begin(), wanted.end(), centers::singular_on_isosceles);
    if (any_singular)
        for (double ph : isosceles_phases(cfg))
            res.windows.push_back({ph, kIsoscelesWindow, "isosceles member"});

    res.samples.resize(static_cast<std::size_t>(n));
    const auto compute = [&](std::size_t k) {
        SweepSample& s = res.samples[k];
        s.phase = kTwoPi * static_cast<double>(k) / n;
        const Triangle ref = family::triangle_at(cfg, LambdaParam::from_phase(s.phase));
        s.triangle = ref;
        if (opt.kind == FamilyKind::tangential) {
            try {
                s.triangle = centers::tangential_triangle(ref, geom::CircleG::unit(), opt.tol);
            } catch (const GeometryError&) {
                s.flags |= flags::degenerate;
                return;
            }
            if (!centers::is_acute(ref))
                s.flags |= flags::obtuse;
        }
        if (s.triangle.degenerate()) {
            s.flags |= flags::degenerate;
            return;
        }
        bool in_window = false;
        for (const auto& w : res.windows)
            in_window = in_window || circular_distance(s.phase, w.phase) < w.radius;
        if (in_window)
            s.flags |= flags::excluded;
        for (CenterIndex c : wanted) {
            if (in_window && centers::singular_on_isosceles(c))
                continue;
            try {
                s.centers[c] = centers::center_of(s.triangle, c, opt.tol);
            } catch (const GeometryError&) {
                s.flags |= flags::singular;
            }
        }
    };

    const int workers = std::clamp(opt.workers, 1, n);
    if (workers == 1) {
        for (std::size_t k = 0; k < res.samples.size(); ++k)
            compute(k);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t k = static_cast<std::size_t>(w); k < res.samples.size();
                     k += static_cast<std::size_t>(workers))
                    compute(k);
            });
        for (auto& t : pool)
            t.join();
    }

    for (std::size_t k = 1; k < res.samples.size(); ++k)
        res.samples[k].triangle = family::match_vertices(res.samples[k - 1].triangle, res.samples[k].triangle);
    return res;
}

} // namespace poncelet::experiments
