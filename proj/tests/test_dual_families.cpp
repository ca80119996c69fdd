#include <gtest/gtest.h>

#include <cmath>

#include "poncelet/dual_families.hpp"
#include "test_support.hpp"

using namespace poncelet;
using namespace poncelet::dual;
using family::FamilyConfig;
using family::LambdaParam;

namespace {
const FamilyConfig kRef{CPoint(0.5, 0.0), CPoint(-1.0 / 3.0, 0.0)};
}

TEST(Tangential, EquilateralMemberDoubles)
{
    const auto s = tangential_family_at(kRef, LambdaParam(1.0));
    ASSERT_FALSE(s.degenerate());
    for (CPoint v : s.tangential->vertices()) {
        EXPECT_NEAR(std::abs(v), 2.0, 1e-13);
        double best = 1e9;
        for (CPoint w : s.reference.vertices())
            best = std::min(best, std::abs(v + 2.0 * w));
        EXPECT_LT(best, 1e-13);
    }
}

TEST(Tangential, CenteredFamilyOuterCircle)
{
    const auto outer = outer_conic(FamilyConfig(0.0, 0.0));
    EXPECT_LT(geom::proportionality_residual(outer, geom::ConicQ::from_circle({0.0, 2.0})), 1e-14);
}

TEST(Tangential, VerticesOnOuterConic)
{
    testing_support::Rng rng;
    for (int i = 0; i < 50; ++i) {
        const FamilyConfig cfg(rng.in_disk(0.8), rng.in_disk(0.8));
        const auto s = tangential_family_at(cfg, LambdaParam(rng.on_circle()));
        if (s.degenerate())
            continue;
        EXPECT_LT(s.max_vertex_residual, 1e-9);
        // outer conic maps back to the caustic
        const auto back = geom::polar_image_of_conic(s.outer_conic, geom::CircleG::unit());
        EXPECT_LT(geom::proportionality_residual(back, cfg.caustic_conic()), 1e-9);
    }
}

TEST(Tangential, RightMemberDegenerate)
{
    // f = g = 0 at any lambda is equilateral; use a family with a right member instead
    const geom::Triangle right(1.0, CPoint(0, 1), -1.0);
    const auto cfg = family::config_from_triangle_and_center(right, CPoint(0.0, 0.3));
    const auto e = testing_support::vieta(right.vertices());
    const auto s = tangential_family_at(cfg, LambdaParam(e[2]));
    EXPECT_TRUE(s.degenerate());
}

TEST(DualEquilateral, Examples)
{
    const auto ref = search_tangential_equilateral(kRef);
    EXPECT_TRUE(ref.found);
    EXPECT_NEAR(std::abs(std::polar(1.0, ref.phase) - 1.0), 0.0, 1e-9);
    EXPECT_FALSE(dual_contains_equilateral(FamilyConfig(0.3, 0.5)));
    EXPECT_TRUE(dual_contains_equilateral(FamilyConfig(0.0, 0.0)));
    EXPECT_TRUE(dual_contains_equilateral(FamilyConfig(CPoint(0.2, 0.6), CPoint(0.2, -0.6))));
}

TEST(DualEquilateral, SearchFindsKnownMinimum)
{
    // |sin| has isolated zeros at 0 and pi
    const auto r = search_min_spread([](double x) { return std::abs(std::sin(x - 1.0)); });
    EXPECT_TRUE(r.found);
    EXPECT_LT(r.min_spread, 1e-10);
    EXPECT_NEAR(std::remainder(r.phase - 1.0, kPi), 0.0, 1e-10);
    const auto none = search_min_spread([](double x) { return 2.0 + std::cos(x); });
    EXPECT_FALSE(none.found);
    EXPECT_NEAR(none.min_spread, 1.0, 1e-10);
}
