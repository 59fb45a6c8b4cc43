#include "fcl/curve.hpp"
#include "fcl/errors.hpp"
#include "fcl/random_curves.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace fcl;
using fcl::test::lift_curve;
using fcl::test::pt;

TEST(ValidateCurve, HorizontalTwoVertexCurveAccepted) {
    const PLCurve c({RationalPoint(Rational(0), Rational(0)), RationalPoint(Rational(1, 2), Rational(0))},
                    {{0, 0}, {1, 0}});
    EXPECT_TRUE(validate_curve(c).ok());
    EXPECT_EQ(c.winding(), (IntOffset{1, 0}));
}

TEST(ValidateCurve, SingleVertexHorizontalAccepted) {
    const PLCurve c({RationalPoint(Rational(0), Rational(1, 3))}, {{1, 0}});
    EXPECT_TRUE(validate_curve(c).ok());
}

TEST(ValidateCurve, CrossingSegmentsRejectedWithWitness) {
    const auto c = lift_curve({{"0", "0"}, {"3/4", "1/2"}, {"3/4", "0"}, {"1/4", "1/2"}});
    const auto r = validate_curve(c);
    ASSERT_TRUE(r.has(IssueKind::self_intersection));
    const auto& issue = r.issues.front();
    ASSERT_TRUE(issue.segments.has_value());
    EXPECT_EQ(*issue.segments, (std::pair<std::size_t, std::size_t>{0, 2}));
}

TEST(ValidateCurve, WindingTwoRejectedAsWrongClass) {
    const PLCurve c({RationalPoint(Rational(0), Rational(0)), RationalPoint(Rational(1, 2), Rational(0))},
                    {{1, 0}, {1, 0}});
    const auto r = validate_curve(c);
    EXPECT_TRUE(r.has(IssueKind::wrong_class));
}

TEST(ValidateCurve, NullHomotopicSquareIsWrongClass) {
    const PLCurve c({RationalPoint(Rational(1, 4), Rational(1, 4)), RationalPoint(Rational(3, 4), Rational(1, 4)),
                     RationalPoint(Rational(3, 4), Rational(3, 4)), RationalPoint(Rational(1, 4), Rational(3, 4))},
                    {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
    const auto r = validate_curve(c);
    EXPECT_TRUE(r.has(IssueKind::wrong_class));
    EXPECT_FALSE(r.has(IssueKind::self_intersection));
}

TEST(ValidateCurve, ClosureAndEmptyAndZeroLength) {
    EXPECT_TRUE(validate_curve(PLCurve({}, {})).has(IssueKind::empty));
    const PLCurve open({RationalPoint(Rational(0), Rational(0)), RationalPoint(Rational(1, 2), Rational(0))},
                       {{1, 0}});
    EXPECT_TRUE(validate_curve(open).has(IssueKind::closure));
    const PLCurve zero({RationalPoint(Rational(0), Rational(0)), RationalPoint(Rational(0), Rational(0))},
                       {{0, 0}, {1, 0}});
    EXPECT_TRUE(validate_curve(zero).has(IssueKind::zero_length_segment));
}

TEST(ValidateCurve, BacktrackingOverlapRejected) {
    // Goes right, back left along the same line, then right again.
    const auto c = lift_curve({{"0", "0"}, {"3/4", "0"}, {"1/4", "0"}});
    EXPECT_TRUE(validate_curve(c).has(IssueKind::self_intersection));
}

TEST(ValidateCurve, CurveTouchingItsOwnTranslateRejected) {
    // A vertical segment of height exactly one meets its own translate.
    const auto c = lift_curve({{"0", "0"}, {"1/4", "0"}, {"1/4", "1"}, {"3/4", "1"}, {"3/4", "0"}});
    EXPECT_FALSE(validate_curve(c).ok());
}

TEST(ValidateCurve, TallSimpleZigzagAccepted) {
    const auto c = lift_curve({{"0", "-1/4"}, {"1/8", "9/4"}, {"3/8", "9/4"}, {"1/2", "-1/4"}});
    EXPECT_TRUE(validate_curve(c).ok());
    // The level-0 lift runs through the stored vertex (0, 3/4).
    const auto [lo, hi] = c.y_extent();
    EXPECT_EQ(lo, Rational(3, 4));
    EXPECT_EQ(hi, Rational(13, 4));
}

TEST(ValidateCurve, RandomGraphCurvesAreValid) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) EXPECT_TRUE(validate_curve(random_graph_curve(rng)).ok());
}

TEST(ValidateCurve, RequireValidThrows) {
    const auto c = lift_curve({{"0", "0"}, {"3/4", "1/2"}, {"3/4", "0"}, {"1/4", "1/2"}});
    EXPECT_THROW(require_valid(c), ValidationError);
}

TEST(PLCurve, LiftRoundTrip) {
    const std::vector<Vec2> q = {pt("1/3", "-5/2"), pt("4/3", "7/4"), pt("5/3", "0")};
    const auto c = PLCurve::from_lift(q, {1, 0});
    auto back = c.lift_points();
    EXPECT_EQ(back.size(), 4u);
    // The lift through the first stored vertex is q shifted into the unit square.
    const Vec2 shift = q[0] - back[0];
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back[k] + shift, q[k]);
    EXPECT_EQ(back[3], back[0] + (Vec2{Rational(1), Rational(0)}));
}

TEST(SameCurve, RotationAndCollinearMerge) {
    const auto a = lift_curve({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "0"}});
    const auto b = lift_curve({{"1/4", "1/2"}, {"1/2", "0"}, {"1", "0"}});
    const auto c = lift_curve({{"0", "0"}, {"1/8", "1/4"}, {"1/4", "1/2"}, {"1/2", "0"}, {"3/4", "0"}});
    EXPECT_TRUE(same_curve(a, b));
    EXPECT_TRUE(same_curve(a, c));
    EXPECT_FALSE(same_curve(a, lift_curve({{"0", "0"}, {"1/4", "1/3"}, {"1/2", "0"}})));
}

TEST(SameCurve, StraightCurvesCompareByLine) {
    EXPECT_TRUE(same_curve(fcl::test::horizontal("1/3"), lift_curve({{"1/5", "1/3"}})));
    EXPECT_TRUE(same_curve(fcl::test::horizontal("0"), lift_curve({{"1/5", "1"}})));
    EXPECT_FALSE(same_curve(fcl::test::horizontal("1/3"), fcl::test::horizontal("1/4")));
}

TEST(PLCurve, TranslationByIntegerIsSameCurve) {
    const auto a = lift_curve({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "0"}});
    EXPECT_TRUE(same_curve(a, a.translated(pt("2", "-3"))));
    EXPECT_FALSE(same_curve(a, a.translated(pt("0", "1/7"))));
    EXPECT_TRUE(validate_curve(a.translated(pt("3/7", "-11/5"))).ok());
}
