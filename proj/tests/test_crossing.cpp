#include "fcl/crossing.hpp"
#include "fcl/errors.hpp"
#include "fcl/random_curves.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fcl;
using fcl::test::horizontal;
using fcl::test::lift_curve;
using fcl::test::pt;

namespace {

// Value at x of the periodic function whose graph is the curve's lift.
Rational graph_value(const PLCurve& c, const Rational& x) {
    const auto q = c.lift_points();
    Rational u = x - q[0].x;
    u -= Rational(floor_to_int(u));
    u += q[0].x;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        if (q[i].x <= u && u <= q[i + 1].x) {
            if (q[i].x == q[i + 1].x) return q[i].y;
            return q[i].y + (q[i + 1].y - q[i].y) * (u - q[i].x) / (q[i + 1].x - q[i].x);
        }
    }
    throw std::logic_error("not a graph curve");
}

// For graph curves f, g the lift of beta meets gamma^ + k iff k is a value of
// f - g, whose range is [min, max] over the breakpoints of both curves.
struct RangeOracle {
    Rational lo, hi;
    std::vector<std::int64_t> levels() const {
        std::vector<std::int64_t> out;
        for (auto k = ceil_to_int(lo); k <= floor_to_int(hi); ++k) out.push_back(k);
        return out;
    }
    bool touches() const { return lo == Rational(floor_to_int(lo)) || hi == Rational(floor_to_int(hi)); }
};

RangeOracle range_oracle(const PLCurve& beta, const PLCurve& gamma) {
    std::vector<Rational> xs;
    for (const auto& v : beta.vertices()) xs.push_back(v.x());
    for (const auto& v : gamma.vertices()) xs.push_back(v.x());
    RangeOracle r;
    bool first = true;
    for (const auto& x : xs) {
        const Rational d = graph_value(beta, x) - graph_value(gamma, x);
        if (first || d < r.lo) r.lo = d;
        if (first || d > r.hi) r.hi = d;
        first = false;
    }
    return r;
}

}  // namespace

TEST(CrossingNumber, DisjointHorizontalsGiveZero) {
    EXPECT_EQ(crossing_number(horizontal("0"), horizontal("1/2")), 0u);
    EXPECT_EQ(torus_distance_formula(horizontal("0"), horizontal("1/2")), 1u);
}

TEST(CrossingNumber, ZigzagInsideUnitBandGivesOne) {
    const auto beta = lift_curve({{"1/4", "1/2"}, {"1/2", "-1/2"}, {"1", "-1/2"}});
    const auto gamma = lift_curve({{"1/3", "0"}, {"2/3", "0"}});
    const auto r = crossing_levels(beta, gamma);
    EXPECT_EQ(r.levels, (std::vector<std::int64_t>{0}));
    EXPECT_EQ(torus_distance_formula(beta, gamma), 2u);
}

TEST(CrossingNumber, ExtentOverThreeLevelsGivesThreeBothWays) {
    const auto beta = lift_curve({{"1/6", "1/2"}, {"1/4", "3/2"}, {"1/2", "-3/2"}, {"1", "-3/2"}});
    const auto gamma = lift_curve({{"1/3", "0"}, {"2/3", "0"}});
    EXPECT_EQ(crossing_levels(beta, gamma).levels, (std::vector<std::int64_t>{-1, 0, 1}));
    EXPECT_EQ(crossing_number(gamma, beta), 3u);
    EXPECT_EQ(torus_distance_formula(beta, gamma), 4u);
}

TEST(CrossingNumber, ReversedArgumentsNegateLevels) {
    const auto beta = lift_curve({{"0", "1/5"}, {"1/4", "12/5"}, {"1/2", "1/5"}});
    const auto gamma = horizontal("1/3");
    const auto ab = crossing_levels(beta, gamma).levels;
    auto ba = crossing_levels(gamma, beta).levels;
    for (auto& k : ba) k = -k;
    std::sort(ba.begin(), ba.end());
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab, (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(CrossingNumber, IdenticalCurvesGiveZeroAndFlag) {
    const auto a = lift_curve({{"0", "0"}, {"1/4", "1/3"}, {"1/2", "0"}});
    const auto r = crossing_levels(a, lift_curve({{"1/4", "1/3"}, {"1/2", "0"}, {"1", "0"}}));
    EXPECT_TRUE(r.identical);
    EXPECT_EQ(r.count(), 0u);
    EXPECT_EQ(torus_distance_formula(a, a), 0u);
}

TEST(CrossingNumber, TangencyIsDegenerateInTransverseMode) {
    const auto beta = lift_curve({{"0", "-1/2"}, {"1/4", "0"}, {"1/2", "-1/2"}});
    EXPECT_THROW(crossing_number(beta, horizontal("0")), DegeneracyError);
    EXPECT_EQ(crossing_number(beta, horizontal("0"), ContactMode::point_set), 1u);
}

TEST(CrossingNumber, MatchesGraphRangeOracle) {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const auto beta = random_graph_curve(rng);
        const auto gamma = random_graph_curve(rng);
        const auto oracle = range_oracle(beta, gamma);
        if (oracle.touches()) {
            EXPECT_THROW(crossing_levels(beta, gamma), DegeneracyError);
            continue;
        }
        try {
            EXPECT_EQ(crossing_levels(beta, gamma).levels, oracle.levels());
            ++checked;
        } catch (const DegeneracyError&) {
            // Interior tangencies at shared breakpoints are genuine non-transverse contacts.
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(CrossingNumber, SymmetricAndTranslationInvariantOnGeneralCurves) {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto beta = random_general_curve(rng);
        const auto gamma = random_general_curve(rng);
        try {
            const auto n = crossing_number(beta, gamma);
            EXPECT_EQ(crossing_number(gamma, beta), n);
            const Vec2 t = pt("1/2", "7/3");
            EXPECT_EQ(crossing_number(beta.translated(t), gamma.translated(t)), n);
            ++checked;
        } catch (const DegeneracyError&) {
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(ElevationContacts, DependOnlyOnLevelDifference) {
    const auto beta = lift_curve({{"0", "-3/2"}, {"1/4", "3/2"}, {"1/2", "-3/2"}});
    const auto gamma = lift_curve({{"1/3", "1/7"}, {"2/3", "1/7"}});
    const auto levels = crossing_levels(beta, gamma).levels;
    for (std::int64_t k = -3; k <= 3; ++k) {
        const auto base = elevation_contacts(beta, k, gamma, 0);
        // beta^ + k meets gamma^ exactly when beta^ meets gamma^ - k.
        const bool hit = std::find(levels.begin(), levels.end(), -k) != levels.end();
        EXPECT_EQ(!base.empty(), hit) << k;
        for (std::int64_t t : {-2, 1, 5}) {
            auto shifted = elevation_contacts(beta, k + t, gamma, t);
            ASSERT_EQ(shifted.size(), base.size());
            for (std::size_t i = 0; i < base.size(); ++i) {
                EXPECT_EQ(shifted[i].x, base[i].x);
                EXPECT_EQ(shifted[i].y, base[i].y + Rational(t));
            }
        }
    }
}

TEST(LiftStrip, RayParityLocatesStrip) {
    const auto h = horizontal("0");
    EXPECT_EQ(lift_strip(h, pt("1/3", "1/2")), 0);
    EXPECT_EQ(lift_strip(h, pt("1/3", "-1/2")), -1);
    EXPECT_EQ(lift_strip(h, pt("7/3", "5/2")), 2);
    EXPECT_THROW(lift_strip(h, pt("1/3", "1")), DegeneracyError);
    const auto z = lift_curve({{"1/4", "1/2"}, {"1/2", "-1/2"}, {"1", "-1/2"}});
    EXPECT_EQ(lift_strip(z, pt("1/4", "0")), -1);
    EXPECT_EQ(lift_strip(z, pt("3/4", "0")), 0);
}
