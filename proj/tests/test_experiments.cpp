#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "poncelet/experiments.hpp"
#include "test_support.hpp"

using namespace poncelet;
using namespace poncelet::experiments;
using centers::CenterIndex;
using family::FamilyConfig;

namespace {

const FamilyConfig kRef = reference_config();
const FamilyConfig kConj{CPoint(0.2, 0.6), CPoint(0.2, -0.6)};
const FamilyConfig kNeg{0.3, 0.5};

std::vector<CPoint> circle_points(CPoint c, double r, int n, double jitter_phase = 0.0)
{
    std::vector<CPoint> out;
    for (int k = 0; k < n; ++k)
        out.push_back(c + std::polar(r, jitter_phase + kTwoPi * k / n));
    return out;
}

} // namespace

TEST(Sweep, ReferenceX110AndX3)
{
    const auto res = sweep(kRef, 360, {CenterIndex::X110, CenterIndex::X3});
    ASSERT_EQ(res.samples.size(), 360u);
    EXPECT_GE(res.windows.size(), 2u);
    for (const auto& s : res.samples) {
        if (s.flags & flags::excluded)
            continue;
        EXPECT_LT(std::abs(s.centers.at(CenterIndex::X110) + 1.0), 1e-8);
        EXPECT_LT(std::abs(s.centers.at(CenterIndex::X3)), 1e-15);
    }
}

TEST(Sweep, ExcludesIsoscelesWindows)
{
    const auto res = sweep(kRef, 360, {CenterIndex::X110});
    bool near_zero = false, near_pi = false;
    for (const auto& w : res.windows) {
        near_zero = near_zero || circular_distance(w.phase, 0.0) < 1e-9;
        near_pi = near_pi || circular_distance(w.phase, kPi) < 1e-9;
        EXPECT_DOUBLE_EQ(w.radius, kIsoscelesWindow);
    }
    EXPECT_TRUE(near_zero);
    EXPECT_TRUE(near_pi);
    // phase 0 and pi are samples of a 360 grid and must be flagged
    EXPECT_TRUE(res.samples[0].flags & flags::excluded);
    EXPECT_TRUE(res.samples[180].flags & flags::excluded);
}

TEST(Sweep, NegativeControlMoves)
{
    const auto pts = sweep(kNeg, 360, {CenterIndex::X110}).points(CenterIndex::X110);
    EXPECT_GT(stationarity(pts).max_deviation, 1e-3);
}

TEST(Sweep, DeterministicAcrossWorkers)
{
    const std::vector<CenterIndex> all(centers::kAllCenters.begin(), centers::kAllCenters.end());
    const auto a = sweep(kRef, 97, all, {FamilyKind::reference, 1, kDegeneracyTol});
    const auto b = sweep(kRef, 97, all, {FamilyKind::reference, 4, kDegeneracyTol});
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        EXPECT_EQ(a.samples[i].flags, b.samples[i].flags);
        EXPECT_EQ(a.samples[i].triangle.vertices(), b.samples[i].triangle.vertices());
        EXPECT_EQ(a.samples[i].centers, b.samples[i].centers);
    }
}

TEST(Sweep, VertexTrackingIsContinuous)
{
    const auto res = sweep(kNeg, 720, {});
    for (std::size_t k = 1; k < res.samples.size(); ++k)
        for (std::size_t v = 0; v < 3; ++v)
            EXPECT_LT(std::abs(res.samples[k].triangle[v] - res.samples[k - 1].triangle[v]), 0.1);
}

TEST(Sweep, TangentialFlagsObtuse)
{
    // the reference caustic contains the circumcenter, so every member is acute
    const auto ref = sweep(kRef, 360, {CenterIndex::X11}, {FamilyKind::tangential, 1, kDegeneracyTol});
    for (const auto& s : ref.samples)
        EXPECT_FALSE(s.flags & flags::obtuse);
    // here it does not; the flag must follow the angles of the reference member
    const FamilyConfig cfg(0.6, 0.7);
    const auto off = sweep(cfg, 90, {CenterIndex::X11}, {FamilyKind::tangential, 1, kDegeneracyTol});
    int obtuse = 0;
    for (const auto& s : off.samples) {
        if (s.flags & flags::degenerate)
            continue;
        const auto member = family::triangle_at(cfg, family::LambdaParam::from_phase(s.phase));
        const bool flagged = s.flags & flags::obtuse;
        EXPECT_EQ(flagged, testing_support::Rng::max_angle(member) > kPi / 2);
        obtuse += flagged;
    }
    EXPECT_GT(obtuse, 0);
}

TEST(Sweep, RejectsTooFewSamples) { EXPECT_THROW(sweep(kRef, 8, {}), std::invalid_argument); }

TEST(Fit, ExactCircle)
{
    const auto pts = circle_points(CPoint(-0.75, 0.0), 0.25, 100, 0.1);
    const auto fit = fit_circle(pts);
    EXPECT_LT(std::abs(fit.center - CPoint(-0.75, 0.0)), 1e-12);
    EXPECT_NEAR(fit.radius, 0.25, 1e-12);
    EXPECT_LT(fit.rms, 1e-12);
}

TEST(Fit, ShortArc)
{
    std::vector<CPoint> pts;
    for (int k = 0; k < 50; ++k)
        pts.push_back(CPoint(2.0, -1.0) + std::polar(3.0, 0.2 + 0.5 * k / 49.0));
    const auto fit = fit_circle(pts);
    EXPECT_LT(std::abs(fit.center - CPoint(2.0, -1.0)), 1e-9);
    EXPECT_NEAR(fit.radius, 3.0, 1e-9);
}

TEST(Fit, NoisyCircle)
{
    testing_support::Rng rng;
    std::vector<CPoint> pts;
    for (int k = 0; k < 400; ++k)
        pts.push_back(std::polar(1.0 + rng.uniform(-1e-3, 1e-3), kTwoPi * k / 400));
    const auto fit = fit_circle(pts);
    EXPECT_LT(std::abs(fit.center), 1e-3);
    EXPECT_NEAR(fit.radius, 1.0, 1e-3);
}

TEST(Fit, Degenerate)
{
    const std::vector<CPoint> same(10, CPoint(0.3, 0.3));
    EXPECT_NEAR(stationarity(same).max_deviation, 0.0, 1e-15);
    EXPECT_THROW(fit_circle(same), GeometryError);
    std::vector<CPoint> line;
    for (int k = 0; k < 10; ++k)
        line.push_back(CPoint(k, 2.0 * k));
    EXPECT_THROW(fit_circle(line), GeometryError);
    EXPECT_THROW(fit_circle(std::vector<CPoint>{0.0, 1.0}), std::invalid_argument);
}

TEST(Verifiers, X110Stationary)
{
    const auto ref = verify_x110_stationary(kRef);
    EXPECT_EQ(ref.status(), Status::pass);
    EXPECT_NEAR(ref.metric("mean_x"), -1.0, 1e-8);
    const auto conj = verify_x110_stationary(kConj);
    EXPECT_EQ(conj.status(), Status::pass);
    EXPECT_NEAR(conj.metric("mean_x"), 1.0, 1e-8);
    const auto neg = verify_x110_stationary(kNeg);
    EXPECT_EQ(neg.status(), Status::fail);
    EXPECT_GT(neg.metric("spread_about_mean"), 1e-3);
}

TEST(Verifiers, X3233Circle)
{
    const auto r = verify_x3233_circle(kRef);
    EXPECT_EQ(r.status(), Status::pass);
    EXPECT_NEAR(r.metric("center_x"), -0.75, 1e-6);
    EXPECT_NEAR(r.metric("center_y"), 0.0, 1e-6);
    EXPECT_NEAR(r.metric("radius"), 0.25, 1e-6);
}

TEST(Verifiers, X3233CircleRotatesWithFoci)
{
    const double th = 0.7;
    const CPoint rot = std::polar(1.0, th);
    const FamilyConfig turned(kRef.f() * rot, kRef.g() * rot);
    const auto r = verify_x3233_circle(turned);
    EXPECT_EQ(r.status(), Status::pass);
    const CPoint c(r.metric("center_x"), r.metric("center_y"));
    EXPECT_LT(std::abs(c - (-0.75) * rot), 1e-6);
    EXPECT_NEAR(r.metric("radius"), 0.25, 1e-6);
}

TEST(Verifiers, DoubleInversion)
{
    const auto r = verify_prop_double_inv(1.0, std::polar(1.0, kPi / 3));
    EXPECT_EQ(r.status(), Status::pass);
    // B' is the real axis
    EXPECT_NEAR(std::remainder(r.metric("b_prime_direction"), kPi), 0.0, 1e-12);
    EXPECT_GE(r.samples(), 10);
    EXPECT_GT(r.metric("min_control_deviation_from_K"), 1e-3);

    // hand example: center 0.2 on the real axis
    const auto cfg = family::config_from_center_and_equilateral_vertex(0.2, std::polar(1.0, kPi / 3));
    EXPECT_LT(swept_x110(cfg, 1.0).max_to_target, 1e-7);

    EXPECT_EQ(verify_prop_double_inv(CPoint(0.5, 0), 1.0).status(), Status::inconclusive);
}

TEST(Verifiers, L35ReferenceData)
{
    const auto t = family::triangle_at(kRef, family::LambdaParam(CPoint(0, 1)));
    const auto cc = centers::classical_centers(t);
    EXPECT_LT(std::abs(cc.x3), 1e-14);
    EXPECT_LT(std::abs(cc.x5 - CPoint(1, -1) / 12.0), 1e-14);
    EXPECT_NEAR(std::abs(1.0 / 12 - cc.x5), 1.0 / 12, 1e-14);

    const auto v = verify_prop_l35_vertex(t, 1.0 / 12);
    EXPECT_EQ(v.status(), Status::pass);
    EXPECT_NEAR(std::abs(v.metric("alpha")), kPi, 1e-9);
    const CPoint predicted = geom::ray_circle_intersection(0.0, geom::rotate_about(1.0 / 12, 0.0, 4 * kPi / 3),
                                                           geom::CircleG::unit());
    EXPECT_LT(std::abs(predicted - std::polar(1.0, 4 * kPi / 3)), 1e-14);
    EXPECT_GT(v.metric("no_pi_control_distance"), 1e-3);

    const auto l = verify_prop_l35(t, 20, kRef.center());
    EXPECT_EQ(l.status(), Status::pass);
    EXPECT_LT(l.metric("known_center_distance_to_l35"), 1e-8);
}

TEST(Verifiers, L35RandomFamilies)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const auto cfg = random_equilateral_config(rng);
        const auto t = random_generic_member(cfg, rng);
        const auto r = verify_prop_l35(t, 12, cfg.center());
        EXPECT_EQ(r.status(), Status::pass);
    }
}

TEST(Verifiers, L35EquilateralRejected)
{
    const geom::Triangle eq(1.0, std::polar(1.0, kTwoPi / 3), std::polar(1.0, 2 * kTwoPi / 3));
    EXPECT_EQ(verify_prop_l35_vertex(eq, 0.1).status(), Status::inconclusive);
}

TEST(Verifiers, FeuerbachAndX65)
{
    const auto f = verify_feuerbach_stationary(kRef);
    EXPECT_EQ(f.status(), Status::pass);
    EXPECT_NEAR(f.metric("mean_x"), -1.0, 1e-7);

    const auto x = verify_x65_circle(kRef);
    EXPECT_EQ(x.status(), Status::pass);
    EXPECT_NEAR(x.metric("center_x"), 1.0 / 6, 1e-7);
    EXPECT_NEAR(x.metric("radius"), 1.0 / 6, 1e-7);

    const auto zero = verify_x65_circle(FamilyConfig(0.0, 0.0));
    EXPECT_EQ(zero.status(), Status::pass);

    // a family without equilateral members: circle misses the origin
    const auto neg = verify_x65_circle(kNeg);
    EXPECT_EQ(neg.status(), Status::pass);
    EXPECT_GT(neg.metric("origin_distance_to_circle"), 1e-3);
}

TEST(Verifiers, X65LocusMatchesE1)
{
    // X65 of the tangential member equals e1 of the reference member
    const auto res = sweep(kRef, 120, {CenterIndex::X65}, {FamilyKind::tangential, 1, kDegeneracyTol});
    for (const auto& s : res.samples) {
        if (!s.usable())
            continue;
        const auto e = kRef.symmetric_functions(std::polar(1.0, s.phase));
        EXPECT_LT(std::abs(s.centers.at(CenterIndex::X65) - e[0]), 1e-10);
    }
}

TEST(Verifiers, PolarEquilateralSmallCorpus)
{
    const auto r = verify_observation_polar_equilateral({kRef, kNeg, kConj});
    EXPECT_EQ(r.status(), Status::pass);
    EXPECT_EQ(r.metric("positives"), 2.0);
}

TEST(Verifiers, CorpusComposition)
{
    const auto corpus = equilateral_corpus(3, 10, 10);
    ASSERT_EQ(corpus.size(), 20u);
    for (int i = 0; i < 10; ++i)
        EXPECT_TRUE(family::contains_equilateral(corpus[static_cast<std::size_t>(i)]));
    for (int i = 10; i < 20; ++i)
        EXPECT_FALSE(family::contains_equilateral(corpus[static_cast<std::size_t>(i)]));
}

TEST(Verifiers, TangentialEnvelope) { EXPECT_EQ(verify_tangential_envelope(kRef).status(), Status::pass); }

TEST(Verifiers, RunAllPasses)
{
    const auto reports = run_all();
    ASSERT_EQ(reports.size(), 9u);
    for (const auto& r : reports)
        EXPECT_EQ(r.status(), Status::pass) << r.id();
}

TEST(Report, StatusRules)
{
    PropositionReport r("x");
    r.record("info", 5.0);
    EXPECT_TRUE(r.pass());
    r.require_at_most("m", 2.0, 1.0);
    EXPECT_EQ(r.status(), Status::fail);
    r.mark_inconclusive("why");
    EXPECT_EQ(r.status(), Status::inconclusive);
    PropositionReport n("nan");
    n.require_at_most("m", std::nan(""), 1.0);
    EXPECT_FALSE(n.pass());
}
