#pragma once

/// \file
/// \brief One verifier per stationarity / locus / containment claim, plus
/// deterministic generators for the randomized corpora.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "poncelet/core.hpp"
#include "poncelet/dual_families.hpp"
#include "poncelet/experiments/fitting.hpp"
#include "poncelet/experiments/report.hpp"
#include "poncelet/experiments/sweep.hpp"
#include "poncelet/family.hpp"
#include "poncelet/geom_kernel.hpp"
#include "poncelet/tri_centers.hpp"

namespace poncelet::experiments {

using geom::CircleG;
using geom::HLine;

struct Tolerances {
    double kernel = kDegeneracyTol;
    double claim = 1e-7;       ///< stationarity and fitted-locus claims
    double locus = 1e-6;       ///< fitted circle parameters, vertex predictions
    double separation = 1e-3;  ///< negative controls must move by more than this
    double criterion = 1e-9;   ///< |f+g| = |fg| on configs with exact foci
    double equilateral_spread = 1e-6;
};

/// The family with foci 1/2 and -1/3 used throughout the examples.
inline FamilyConfig reference_config() { return {CPoint(0.5, 0.0), CPoint(-1.0 / 3.0, 0.0)}; }

inline constexpr int kDefaultSamples = 360;

// ---------------------------------------------------------------------------
// Generators

inline CPoint random_in_disk(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, kTwoPi * u(rng));
}

inline CPoint random_on_circle(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    return std::polar(1.0, u(rng));
}

/// Family built to contain an equilateral member.
inline FamilyConfig random_equilateral_config(std::mt19937_64& rng)
{
    for (;;) {
        const CPoint o = random_in_disk(rng, 0.5);
        const CPoint a = random_on_circle(rng);
        if (std::abs(o) < 1e-3)
            continue;
        try {
            return family::config_from_center_and_equilateral_vertex(o, a);
        } catch (const GeometryError&) {
        }
    }
}

inline FamilyConfig random_config(std::mt19937_64& rng)
{
    return {random_in_disk(rng, 0.9), random_in_disk(rng, 0.9)};
}

/// Random family that fails the equilateral criterion.
inline FamilyConfig random_reject_config(std::mt19937_64& rng, double tol = 1e-9)
{
    for (;;) {
        FamilyConfig c = random_config(rng);
        if (!family::contains_equilateral(c, tol))
            return c;
    }
}

/// n_pos criterion-satisfying configs followed by n_neg rejects.
inline std::vector<FamilyConfig> equilateral_corpus(std::uint64_t seed, int n_pos = 100, int n_neg = 100)
{
    std::mt19937_64 rng(seed);
    std::vector<FamilyConfig> out;
    for (int i = 0; i < n_pos; ++i)
        out.push_back(random_equilateral_config(rng));
    for (int i = 0; i < n_neg; ++i)
        out.push_back(random_reject_config(rng));
    return out;
}

/// Member at a random phase that is clearly scalene.
inline Triangle random_generic_member(const FamilyConfig& cfg, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (;;) {
        const Triangle t = family::triangle_at(cfg, LambdaParam::from_phase(u(rng)));
        const auto s = t.sides();
        const double a = s[0] * s[0], b = s[1] * s[1], c = s[2] * s[2];
        const double m = std::min({std::abs(a - b), std::abs(b - c), std::abs(c - a)});
        if (m > 1e-2 * (a + b + c) / 3.0)
            return t;
    }
}

// ---------------------------------------------------------------------------
// Shared pieces

/// Swept X110 of a family: stationarity about the mean and the max distance
/// to `target` over included samples.
struct X110Sweep {
    StationarityReport stat;
    double max_to_target = 0.0;
    double min_to_target = 0.0;
};

inline X110Sweep swept_x110(const FamilyConfig& cfg, CPoint target, int n = kDefaultSamples)
{
    const auto pts = sweep(cfg, n, {CenterIndex::X110}).points(CenterIndex::X110);
    if (pts.size() < 2)
        throw GeometryError("swept_x110: too few usable samples");
    X110Sweep out;
    out.stat = stationarity(pts);
    out.max_to_target = max_distance_to(pts, target);
    out.min_to_target = std::abs(pts.front() - target);
    for (CPoint p : pts)
        out.min_to_target = std::min(out.min_to_target, std::abs(p - target));
    return out;
}

inline double criterion_residual(const FamilyConfig& cfg)
{
    return std::abs(std::abs(cfg.f() + cfg.g()) - std::abs(cfg.f() * cfg.g()));
}

// ---------------------------------------------------------------------------
// Verifiers

/// X110 stationary at (1/f + 1/g)^{-1} over a family with an equilateral member.
inline PropositionReport verify_x110_stationary(const FamilyConfig& cfg, int n = kDefaultSamples,
                                                const Tolerances& tol = {})
{
    PropositionReport rep("x110-stationary");
    const auto res = sweep(cfg, n, {CenterIndex::X110}, {FamilyKind::reference, 1, tol.kernel});
    const auto pts = res.points(CenterIndex::X110);
    rep.set_samples(static_cast<long>(pts.size()));
    rep.record("excluded_windows", static_cast<double>(res.windows.size()));
    if (pts.size() < 2) {
        rep.mark_inconclusive("too few usable samples");
        return rep;
    }
    const auto st = stationarity(pts);
    rep.record("mean_x", st.mean.real());
    rep.record("mean_y", st.mean.imag());
    rep.record("spread_about_mean", st.max_deviation);
    rep.record("criterion_residual", criterion_residual(cfg));
    if (!family::contains_equilateral(cfg, tol.criterion)) {
        rep.fail("precondition failed: the family has no equilateral member");
        return rep;
    }
    const CPoint pred = family::stationary_x110_prediction(cfg);
    rep.record("prediction_x", pred.real());
    rep.record("prediction_y", pred.imag());
    rep.require_at_most("prediction_modulus_error", std::abs(std::abs(pred) - 1.0), tol.locus);
    rep.require_at_most("max_deviation_from_prediction", max_distance_to(pts, pred), tol.claim);
    return rep;
}

/// X3233 sweeps the circle on diameter X110 X1511.
inline PropositionReport verify_x3233_circle(const FamilyConfig& cfg, int n = kDefaultSamples,
                                             const Tolerances& tol = {})
{
    PropositionReport rep("x3233-circle");
    const auto res = sweep(cfg, n, {CenterIndex::X110, CenterIndex::X1511, CenterIndex::X3233},
                           {FamilyKind::reference, 1, tol.kernel});
    const auto vtx = res.points(CenterIndex::X3233);
    rep.set_samples(static_cast<long>(vtx.size()));
    if (vtx.size() < 3) {
        rep.mark_inconclusive("too few usable samples");
        return rep;
    }
    if (!family::contains_equilateral(cfg, tol.criterion))
        rep.fail("precondition failed: the family has no equilateral member");

    const CPoint f110 = stationarity(res.points(CenterIndex::X110)).mean;
    const CPoint f1511 = stationarity(res.points(CenterIndex::X1511)).mean;
    const CPoint expected_center = 0.5 * (f110 + f1511);
    const double expected_radius = 0.5 * std::abs(f110 - f1511);
    rep.record("expected_center_x", expected_center.real());
    rep.record("expected_center_y", expected_center.imag());
    rep.record("expected_radius", expected_radius);
    try {
        const auto fit = fit_circle(vtx);
        rep.record("center_x", fit.center.real());
        rep.record("center_y", fit.center.imag());
        rep.record("radius", fit.radius);
        rep.require_at_most("center_error", std::abs(fit.center - expected_center), tol.locus);
        rep.require_at_most("radius_error", std::abs(fit.radius - expected_radius), tol.locus);
        rep.require_at_most("fit_rms", fit.rms, tol.claim);
        rep.require_at_most("diameter_minus_half", std::abs(2.0 * fit.radius - 0.5), tol.locus);
    } catch (const GeometryError& e) {
        rep.fail(std::string("circle fit failed: ") + e.what());
    }
    return rep;
}

/// Samples `m` points uniformly on `line` within `half_width` of the foot of
/// the perpendicular from `origin`.
inline std::vector<CPoint> samples_on_line(const HLine& line, CPoint origin, int m, double half_width = 0.45)
{
    std::vector<CPoint> out;
    const CPoint foot = line.project(origin);
    const CPoint dir = line.direction();
    for (int k = 0; k < m; ++k) {
        const double t = m == 1 ? 0.0 : -half_width + 2.0 * half_width * k / (m - 1);
        out.push_back(foot + t * dir);
    }
    return out;
}

/// Caustic centers on the reflection of the external bisector of K X3 A_eq
/// about X3 A_eq all give X110 stationary at K.
inline PropositionReport verify_prop_double_inv(CPoint k, CPoint a_eq, int m = 20, const Tolerances& tol = {},
                                                double control_offset = 0.05)
{
    PropositionReport rep("double-inv-1");
    if (std::abs(std::abs(k) - 1.0) > 1e-9 || std::abs(std::abs(a_eq) - 1.0) > 1e-9) {
        rep.mark_inconclusive("K and A_eq must lie on the unit circle");
        return rep;
    }
    const CPoint x3(0.0, 0.0);
    HLine b_prime;
    try {
        const HLine b = geom::external_bisector(x3, k, a_eq, tol.kernel);
        b_prime = geom::reflect_line_in_line(b, HLine::through(x3, a_eq));
    } catch (const GeometryError& e) {
        rep.mark_inconclusive(std::string("bisector undefined: ") + e.what());
        return rep;
    }
    rep.record("b_prime_direction", std::arg(b_prime.direction()));

    int admissible = 0, skipped = 0, controls = 0;
    double max_dev = 0.0, max_criterion = 0.0;
    double min_control = std::numeric_limits<double>::infinity();
    for (CPoint omega : samples_on_line(b_prime, x3, m)) {
        if (std::abs(omega) < 1e-9) {
            ++skipped;
            continue;
        }
        FamilyConfig cfg;
        try {
            cfg = family::config_from_center_and_equilateral_vertex(omega, a_eq);
        } catch (const GeometryError&) {
            continue;
        }
        ++admissible;
        max_criterion = std::max(max_criterion, criterion_residual(cfg));
        max_dev = std::max(max_dev, swept_x110(cfg, k).max_to_target);

        const CPoint off = omega + control_offset * b_prime.normal();
        try {
            const FamilyConfig ctl = family::config_from_center_and_equilateral_vertex(off, a_eq);
            min_control = std::min(min_control, swept_x110(ctl, k).min_to_target);
            ++controls;
        } catch (const GeometryError&) {
        }
    }
    rep.set_samples(admissible);
    rep.record("skipped_all_equilateral", skipped);
    rep.record("admissible_fraction", static_cast<double>(admissible) / m);
    rep.record("control_count", controls);
    if (admissible < 2) {
        rep.mark_inconclusive("fewer than 2 admissible caustic centers on B'");
        return rep;
    }
    rep.require_at_least("admissible_count", admissible, 0.5 * m);
    rep.require_at_most("max_criterion_residual", max_criterion, tol.criterion);
    rep.require_at_most("max_x110_deviation_from_K", max_dev, tol.claim);
    if (controls > 0)
        rep.require_at_least("min_control_deviation_from_K", min_control, tol.separation);
    return rep;
}

/// Equilateral vertex predicted by rotating omega about X3 by alpha/3 + pi
/// and meeting the ray X3 omega' with the circumcircle. alpha is the signed
/// angle from ray X3->X110 to ray X3->omega; when that orientation misses,
/// -alpha is tried and the branch recorded.
inline PropositionReport verify_prop_l35_vertex(const Triangle& t_o, CPoint omega, const Tolerances& tol = {})
{
    PropositionReport rep("l35-vertex");
    CPoint x110, x3;
    CircleG cc;
    family::FamilyConfig cfg;
    try {
        x110 = centers::x110(t_o, tol.kernel);
        cc = centers::circumcircle(t_o);
        x3 = cc.center;
        cfg = family::config_from_triangle_and_center(t_o, omega, tol.kernel);
    } catch (const GeometryError& e) {
        rep.mark_inconclusive(std::string("precondition: ") + e.what());
        return rep;
    }
    if (std::abs(omega - x3) <= tol.kernel) {
        rep.mark_inconclusive("omega coincides with X3; alpha undefined");
        return rep;
    }
    Triangle eq;
    try {
        eq = family::equilateral_vertices(cfg, {}, tol.claim);
    } catch (const GeometryError& e) {
        rep.fail(std::string("family has no equilateral member: ") + e.what());
        return rep;
    }

    const auto nearest_vertex = [&](CPoint p) {
        double d = std::numeric_limits<double>::infinity();
        for (CPoint v : eq.vertices())
            d = std::min(d, std::abs(p - v));
        return d;
    };
    const auto predict = [&](double rotation) {
        const CPoint rotated = geom::rotate_about(omega, x3, rotation);
        return geom::ray_circle_intersection(x3, rotated, cc);
    };

    const double alpha = wrap_angle(std::arg(omega - x3) - std::arg(x110 - x3));
    rep.record("alpha", alpha);
    const double d_plus = nearest_vertex(predict(alpha / 3.0 + kPi));
    const double d_minus = nearest_vertex(predict(-alpha / 3.0 + kPi));
    rep.record("distance_branch_plus", d_plus);
    rep.record("distance_branch_minus", d_minus);
    const bool plus_ok = d_plus <= tol.locus;
    rep.record("branch", plus_ok ? 1.0 : (d_minus <= tol.locus ? -1.0 : 0.0));
    rep.require_at_most("vertex_distance", plus_ok ? d_plus : d_minus, tol.locus);

    // Without the +pi term the construction lands on an antipode.
    const double no_pi = std::min(nearest_vertex(predict(alpha / 3.0)), nearest_vertex(predict(-alpha / 3.0)));
    rep.require_at_least("no_pi_control_distance", no_pi, tol.separation);
    rep.set_samples(1);
    return rep;
}

/// A family through t_o contains an equilateral iff its caustic center lies
/// on the perpendicular bisector of X3 X5; the stationary X110 does not
/// depend on which such center is chosen.
inline PropositionReport verify_prop_l35(const Triangle& t_o, int m = 20, std::optional<CPoint> known_center = {},
                                         const Tolerances& tol = {}, double control_offset = 0.02)
{
    PropositionReport rep("l35");
    centers::ClassicalCenters cc;
    CPoint x110_ref;
    try {
        cc = centers::classical_centers(t_o);
        x110_ref = centers::x110(t_o, tol.kernel);
    } catch (const GeometryError& e) {
        rep.mark_inconclusive(std::string("precondition: ") + e.what());
        return rep;
    }
    for (CPoint v : t_o.vertices())
        if (std::abs(std::abs(v) - 1.0) > 1e-9) {
            rep.mark_inconclusive("triangle is not inscribed in the unit circle");
            return rep;
        }
    if (std::abs(cc.x5 - cc.x3) <= tol.kernel) {
        rep.mark_inconclusive("X3 = X5; L35 undefined");
        return rep;
    }
    const CPoint mid = 0.5 * (cc.x3 + cc.x5);
    const HLine l35 = HLine::through_with_direction(mid, CPoint(0.0, 1.0) * (cc.x5 - cc.x3));

    const auto inside_medial = [&](CPoint p) {
        const auto bc = family::barycentric_of(t_o, p);
        return std::all_of(bc.begin(), bc.end(), [](double b) { return b < 0.5 - 1e-6; });
    };

    std::vector<CPoint> omegas;
    for (CPoint p : samples_on_line(l35, cc.x3, m))
        if (inside_medial(p))
            omegas.push_back(p);
    if (known_center) {
        rep.require_at_most("known_center_distance_to_l35", l35.distance(*known_center), 1e-8);
        if (inside_medial(*known_center))
            omegas.push_back(*known_center);
    }
    rep.set_samples(static_cast<long>(omegas.size()));
    if (omegas.empty()) {
        rep.mark_inconclusive("no admissible caustic center on L35");
        return rep;
    }

    double max_criterion = 0.0, max_family_dev = 0.0, max_vertex = 0.0;
    int branch_plus = 0, branch_minus = 0, vertex_failures = 0;
    std::vector<CPoint> stationary;
    for (CPoint omega : omegas) {
        FamilyConfig cfg;
        try {
            cfg = family::config_from_triangle_and_center(t_o, omega, tol.kernel);
        } catch (const GeometryError& e) {
            rep.fail(std::string("admissible center rejected: ") + e.what());
            continue;
        }
        max_criterion = std::max(max_criterion, criterion_residual(cfg));
        const auto sx = swept_x110(cfg, x110_ref);
        max_family_dev = std::max(max_family_dev, sx.stat.max_deviation);
        stationary.push_back(sx.stat.mean);

        const auto vr = verify_prop_l35_vertex(t_o, omega, tol);
        if (!vr.pass())
            ++vertex_failures;
        max_vertex = std::max(max_vertex, vr.metric("vertex_distance"));
        const double br = vr.metric("branch");
        branch_plus += br > 0.0;
        branch_minus += br < 0.0;
    }
    double spread = 0.0, to_ref = 0.0;
    for (CPoint a : stationary) {
        to_ref = std::max(to_ref, std::abs(a - x110_ref));
        for (CPoint b : stationary)
            spread = std::max(spread, std::abs(a - b));
    }
    rep.require_at_most("max_criterion_residual", max_criterion, tol.claim);
    rep.require_at_most("max_within_family_x110_spread", max_family_dev, tol.locus);
    rep.require_at_most("x110_spread_across_centers", spread, tol.locus);
    rep.record("x110_distance_to_reference_x110", to_ref);
    rep.require_at_most("vertex_prediction_failures", vertex_failures, 0.0);
    rep.record("vertex_prediction_max_distance", max_vertex);
    rep.record("branch_plus_count", branch_plus);
    rep.record("branch_minus_count", branch_minus);

    // Controls: shifted off L35, and the centroid.
    double min_control = std::numeric_limits<double>::infinity();
    int controls = 0;
    std::vector<CPoint> off;
    for (CPoint omega : omegas)
        for (double s : {-1.0, 1.0})
            off.push_back(omega + s * control_offset * l35.normal());
    if (l35.distance(cc.x2) > tol.separation)
        off.push_back(cc.x2);
    for (CPoint p : off) {
        if (!inside_medial(p))
            continue;
        try {
            const FamilyConfig c = family::config_from_triangle_and_center(t_o, p, tol.kernel);
            min_control = std::min(min_control, criterion_residual(c));
            ++controls;
        } catch (const GeometryError&) {
        }
    }
    rep.record("control_count", controls);
    if (controls > 0)
        rep.require_at_least("min_control_criterion_residual", min_control, tol.claim);
    return rep;
}

/// Feuerbach point of the tangential family is stationary at the stationary X110.
inline PropositionReport verify_feuerbach_stationary(const FamilyConfig& cfg, int n = kDefaultSamples,
                                                     const Tolerances& tol = {})
{
    PropositionReport rep("feuerbach");
    const auto res = sweep(cfg, n, {CenterIndex::X11}, {FamilyKind::tangential, 1, tol.kernel});
    const auto pts = res.points(CenterIndex::X11);
    rep.set_samples(static_cast<long>(pts.size()));
    if (pts.size() < 8) {
        rep.mark_inconclusive("fewer than 8 acute members");
        return rep;
    }
    const auto st = stationarity(pts);
    rep.record("mean_x", st.mean.real());
    rep.record("mean_y", st.mean.imag());
    rep.record("spread_about_mean", st.max_deviation);
    if (!family::contains_equilateral(cfg, tol.criterion)) {
        rep.fail("precondition failed: the family has no equilateral member");
        return rep;
    }
    const CPoint pred = family::stationary_x110_prediction(cfg);
    rep.require_at_most("max_deviation_from_prediction", max_distance_to(pts, pred), tol.claim);
    rep.require_at_most("mean_deviation_from_prediction", std::abs(st.mean - pred), tol.claim);
    return rep;
}

/// X65 of the tangential family runs on the circle of center f + g and
/// radius |f g| (it is X4 = e1 of the reference member).
inline PropositionReport verify_x65_circle(const FamilyConfig& cfg, int n = kDefaultSamples,
                                           const Tolerances& tol = {})
{
    PropositionReport rep("x65-circle");
    const auto res = sweep(cfg, n, {CenterIndex::X65}, {FamilyKind::tangential, 1, tol.kernel});
    const auto pts = res.points(CenterIndex::X65);
    rep.set_samples(static_cast<long>(pts.size()));
    if (pts.size() < 8) {
        rep.mark_inconclusive("fewer than 8 acute members");
        return rep;
    }
    const auto st = stationarity(pts);
    const CPoint center = cfg.f() + cfg.g();
    const double radius = std::abs(cfg.f() * cfg.g());
    if (st.max_deviation <= tol.claim) {
        rep.note("locus is a single point; circle fit skipped");
        rep.record("spread_about_mean", st.max_deviation);
        rep.require_at_most("expected_radius", radius, tol.claim);
        rep.require_at_most("center_error", std::abs(st.mean - center), tol.claim);
        return rep;
    }
    try {
        const auto fit = fit_circle(pts);
        rep.record("center_x", fit.center.real());
        rep.record("center_y", fit.center.imag());
        rep.record("radius", fit.radius);
        rep.require_at_most("fit_rms", fit.rms, tol.claim);
        rep.require_at_most("center_error", std::abs(fit.center - center), tol.claim);
        rep.require_at_most("radius_error", std::abs(fit.radius - radius), tol.claim);
        const double through_origin = std::abs(std::abs(fit.center) - fit.radius);
        if (family::contains_equilateral(cfg, tol.criterion))
            rep.require_at_most("origin_distance_to_circle", through_origin, tol.claim);
        else
            rep.require_at_least("origin_distance_to_circle", through_origin, tol.separation);
    } catch (const GeometryError& e) {
        rep.fail(std::string("circle fit failed: ") + e.what());
    }
    return rep;
}

/// A family contains an equilateral iff its tangential (polar) family does.
inline PropositionReport verify_observation_polar_equilateral(const std::vector<FamilyConfig>& corpus,
                                                              const Tolerances& tol = {})
{
    PropositionReport rep("polar-equilateral");
    if (corpus.empty()) {
        rep.mark_inconclusive("empty corpus");
        return rep;
    }
    int mismatches = 0, positives = 0;
    double max_pos = 0.0, min_neg = std::numeric_limits<double>::infinity();
    for (const auto& cfg : corpus) {
        const bool primal = family::contains_equilateral(cfg, tol.criterion);
        const auto search = dual::search_tangential_equilateral(cfg, 720, tol.equilateral_spread);
        if (primal != search.found)
            ++mismatches;
        if (primal) {
            ++positives;
            max_pos = std::max(max_pos, search.min_spread);
        } else {
            min_neg = std::min(min_neg, search.min_spread);
        }
    }
    rep.set_samples(static_cast<long>(corpus.size()));
    rep.record("positives", positives);
    rep.record("negatives", static_cast<double>(corpus.size()) - positives);
    rep.record("max_positive_min_spread", max_pos);
    if (std::isfinite(min_neg))
        rep.record("min_negative_min_spread", min_neg);
    rep.require_at_most("mismatches", mismatches, 0.0);
    return rep;
}

/// Tangential vertices lie on the polar image of the caustic, and polarity
/// maps that outer conic back to the caustic.
inline PropositionReport verify_tangential_envelope(const FamilyConfig& cfg, int n = kDefaultSamples,
                                                    const Tolerances& tol = {})
{
    PropositionReport rep("tangential-envelope");
    double worst = 0.0;
    int used = 0;
    for (int k = 0; k < n; ++k) {
        const auto s = dual::tangential_family_at(cfg, LambdaParam::from_phase(kTwoPi * k / n), tol.kernel);
        if (s.degenerate())
            continue;
        ++used;
        worst = std::max(worst, s.max_vertex_residual);
    }
    rep.set_samples(used);
    const auto back = geom::polar_image_of_conic(dual::outer_conic(cfg), CircleG::unit());
    rep.require_at_most("max_vertex_residual", worst, 1e-9);
    rep.require_at_most("involution_residual", geom::proportionality_residual(back, cfg.caustic_conic()), 1e-9);
    return rep;
}

// ---------------------------------------------------------------------------

struct RunAllOptions {
    std::uint64_t seed = 1;
    int samples = kDefaultSamples;
    Tolerances tol;
};

/// Every verifier on its default inputs.
inline std::vector<PropositionReport> run_all(const RunAllOptions& opt = {})
{
    const FamilyConfig ref = reference_config();
    std::vector<PropositionReport> out;
    out.push_back(verify_x110_stationary(ref, opt.samples, opt.tol));
    out.push_back(verify_x3233_circle(ref, opt.samples, opt.tol));
    out.push_back(verify_prop_double_inv(CPoint(1.0, 0.0), std::polar(1.0, kPi / 3.0), 20, opt.tol));

    std::mt19937_64 rng(opt.seed);
    const FamilyConfig lc = random_equilateral_config(rng);
    const Triangle t_o = random_generic_member(lc, rng);
    out.push_back(verify_prop_l35(t_o, 20, lc.center(), opt.tol));

    const Triangle t_ref = family::triangle_at(ref, LambdaParam(CPoint(0.0, 1.0)));
    out.push_back(verify_prop_l35_vertex(t_ref, ref.center(), opt.tol));
    out.push_back(verify_feuerbach_stationary(ref, opt.samples, opt.tol));
    out.push_back(verify_x65_circle(ref, opt.samples, opt.tol));
    out.push_back(verify_observation_polar_equilateral(equilateral_corpus(opt.seed), opt.tol));
    out.push_back(verify_tangential_envelope(ref, opt.samples, opt.tol));
    return out;
}

} // namespace poncelet::experiments
