#include "fcl/geometry.hpp"

#include <gtest/gtest.h>

using namespace fcl;

namespace {

Vec2 v(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST(Geometry, ProperCrossing) {
    const auto c = classify_contact({v(0, 0), v(2, 2)}, {v(0, 2), v(2, 0)});
    ASSERT_EQ(c.kind, ContactKind::proper);
    EXPECT_EQ(*c.point, v(1, 1));
}

TEST(Geometry, Disjoint) {
    EXPECT_EQ(classify_contact({v(0, 0), v(1, 0)}, {v(0, 1), v(1, 1)}).kind, ContactKind::none);
    EXPECT_EQ(classify_contact({v(0, 0), v(1, 1)}, {v(2, 0), v(3, -5)}).kind, ContactKind::none);
    // Collinear but separated.
    EXPECT_EQ(classify_contact({v(0, 0), v(1, 0)}, {v(2, 0), v(3, 0)}).kind, ContactKind::none);
}

TEST(Geometry, EndpointOnInterior) {
    const auto c = classify_contact({v(0, 0), v(2, 0)}, {v(1, 0), v(1, 5)});
    ASSERT_EQ(c.kind, ContactKind::touch);
    EXPECT_EQ(*c.point, v(1, 0));
}

TEST(Geometry, SharedEndpoint) {
    const auto c = classify_contact({v(0, 0), v(1, 0)}, {v(1, 0), v(1, 1)});
    ASSERT_EQ(c.kind, ContactKind::touch);
    EXPECT_EQ(*c.point, v(1, 0));
}

TEST(Geometry, CollinearTouchAndOverlap) {
    const auto t = classify_contact({v(0, 0), v(1, 0)}, {v(1, 0), v(3, 0)});
    ASSERT_EQ(t.kind, ContactKind::touch);
    EXPECT_EQ(*t.point, v(1, 0));
    EXPECT_EQ(classify_contact({v(0, 0), v(2, 0)}, {v(1, 0), v(3, 0)}).kind, ContactKind::overlap);
    EXPECT_EQ(classify_contact({v(0, 0), v(0, 2)}, {v(0, 1), v(0, 3)}).kind, ContactKind::overlap);
}

TEST(Geometry, TranslationRangeCoversAllOverlaps) {
    const Box a{Rational(0), Rational(1, 2), Rational(0), Rational(3, 2)};
    const Box b{Rational(1, 4), Rational(1), Rational(-1, 2), Rational(0)};
    const auto r = overlapping_translations(a, b);
    // Brute force over a generous window.
    for (long x = -5; x <= 5; ++x) {
        for (long y = -5; y <= 5; ++y) {
            const bool meets = b.xmin + x <= a.xmax && a.xmin <= b.xmax + x && b.ymin + y <= a.ymax && a.ymin <= b.ymax + y;
            const bool in_range = r.ax_lo <= x && x <= r.ax_hi && r.by_lo <= y && y <= r.by_hi;
            EXPECT_EQ(meets, in_range) << x << "," << y;
        }
    }
}
