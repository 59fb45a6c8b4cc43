#include "fcl/crossing.hpp"
#include "fcl/errors.hpp"
#include "fcl/grid.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace fcl;

namespace {

// Counts simple cycles of class (1,0) by scanning every subset of grid edges.
std::size_t brute_force_cycle_count(int w, int h) {
    struct Edge {
        int u, v, dx, dy;
    };
    std::vector<Edge> edges;
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            const int u = j * w + i;
            edges.push_back({u, j * w + (i + 1) % w, 1, 0});
            edges.push_back({u, ((j + 1) % h) * w + i, 0, 1});
        }
    }
    const int n = w * h;
    const std::size_t m = edges.size();
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            incident[edges[e].u].push_back(e);
            incident[edges[e].v].push_back(e);
            ok = incident[edges[e].u].size() <= 2 && incident[edges[e].v].size() <= 2;
        }
        if (!ok) continue;
        int start = -1;
        for (int v = 0; v < n; ++v) {
            if (incident[v].size() == 1) ok = false;
            if (incident[v].size() == 2 && start < 0) start = v;
        }
        if (!ok || start < 0) continue;
        // Walk the component through start, summing displacements.
        int v = start;
        std::size_t prev = m, used = 0;
        int sx = 0, sy = 0;
        do {
            const std::size_t e = incident[v][0] != prev ? incident[v][0] : incident[v][1];
            const bool forward = edges[e].u == v && !(edges[e].u == edges[e].v);
            sx += forward ? edges[e].dx : -edges[e].dx;
            sy += forward ? edges[e].dy : -edges[e].dy;
            v = forward ? edges[e].v : edges[e].u;
            prev = e;
            ++used;
        } while (v != start);
        if (used != static_cast<std::size_t>(__builtin_popcountll(mask))) continue;
        if (std::abs(sx) == w && sy == 0) ++count;
    }
    return count;
}

// h times the number of length-w sequences in [-s, s] that sum to zero.
std::size_t staircase_count(int w, int h, int s) {
    std::map<int, std::size_t> ways{{0, 1}};
    for (int c = 0; c < w; ++c) {
        std::map<int, std::size_t> next;
        for (const auto& [sum, k] : ways)
            for (int d = -s; d <= s; ++d) next[sum + d] += k;
        ways = std::move(next);
    }
    return static_cast<std::size_t>(h) * ways[0];
}

}  // namespace

TEST(EnumerateGridCurves, SmallGridsMatchEdgeSubsetSearch) {
    for (const auto& [w, h] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        EXPECT_EQ(enumerate_grid_curves(w, h).size(), brute_force_cycle_count(w, h)) << w << "x" << h;
    }
    EXPECT_EQ(enumerate_grid_curves(2, 2).size(), 6u);
    EXPECT_EQ(enumerate_grid_curves(3, 3).size(), 75u);
}

TEST(EnumerateGridCurves, LargerCounts) {
    EXPECT_EQ(enumerate_grid_curves(3, 4).size(), 316u);
    EXPECT_EQ(enumerate_grid_curves(4, 4).size(), 3132u);
}

TEST(EnumerateGridCurves, CurvesAreValidDistinctAndOnTheGrid) {
    const auto curves = enumerate_grid_curves(3, 4);
    std::set<std::vector<LatticePoint>> seen;
    for (const auto& c : curves) {
        EXPECT_TRUE(seen.insert(c.path()).second);
        const auto pl = c.to_pl();
        EXPECT_TRUE(validate_curve(pl).ok());
        const auto back = grid_curve_from_pl(pl, 3, 4);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, c);
    }
}

TEST(EnumerateGridCurves, InvariantUnderVerticalRotation) {
    // Shifting every curve up one row permutes the set.
    const auto curves = enumerate_grid_curves(3, 4);
    std::set<std::vector<LatticePoint>> all;
    for (const auto& c : curves) all.insert(c.path());
    for (const auto& c : curves) {
        auto p = c.path();
        for (auto& q : p) ++q.j;
        EXPECT_TRUE(all.count(GridCurve(3, 4, p).path()));
    }
}

TEST(EnumerateGridCurves, CapExceededCarriesEstimate) {
    Caps caps;
    caps.max_count = 100;
    try {
        enumerate_grid_curves(4, 4, caps);
        FAIL() << "expected a cap error";
    } catch (const CapExceededError& e) {
        EXPECT_NE(std::string(e.what()).find("estimated total"), std::string::npos);
    }
    EXPECT_THROW(enumerate_grid_curves(7, 7), CapExceededError);
    EXPECT_THROW(enumerate_grid_curves(1, 4), ValidationError);
}

TEST(EstimateGridCurveCount, CloseToExactCount) {
    const double est = estimate_grid_curve_count(4, 4, 3, 200000);
    EXPECT_NEAR(est, 3132.0, 3132.0 * 0.1);
}

TEST(GridCurve, RejectsBadPaths) {
    EXPECT_THROW(GridCurve(3, 3, {{0, 0}, {2, 0}}), ValidationError);
    EXPECT_THROW(GridCurve(3, 3, {{0, 0}, {1, 0}}), ValidationError);
    EXPECT_THROW(GridCurve(3, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 0}, {2, 0}}), ValidationError);
}

TEST(GridCurve, CanonicalStart) {
    const GridCurve a(3, 3, {{1, 1}, {2, 1}, {3, 1}});
    const GridCurve b(3, 3, {{0, 1}, {1, 1}, {2, 1}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.path().front(), (LatticePoint{0, 1}));
}

TEST(GridCurveFromPl, OffGridCurveRejected) {
    const GridCurve g(4, 4, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    auto pl = g.to_pl().translated({Rational(0), Rational(1, 8)});
    EXPECT_FALSE(grid_curve_from_pl(pl, 4, 4).has_value());
    EXPECT_TRUE(grid_curve_from_pl(g.to_pl(), 4, 4).has_value());
}

TEST(StaircaseCurves, CountsMatchSequenceFormula) {
    for (int w = 2; w <= 6; ++w)
        for (int h = 2; h <= 6; ++h)
            for (int s = 1; s < h; ++s) {
                const auto expected = staircase_count(w, h, s);
                if (expected > Caps{}.max_count) {
                    EXPECT_THROW(enumerate_staircase_curves(w, h, s), CapExceededError);
                    continue;
                }
                EXPECT_EQ(enumerate_staircase_curves(w, h, s).size(), expected) << w << "x" << h << " step " << s;
            }
}

TEST(OracleFamily, SixBySixSizes) {
    EXPECT_EQ(coarse_curves(6, 6).size(), 57u);
    EXPECT_EQ(oracle_family(6, 6).size(), 900u);
    EXPECT_THROW(coarse_curves(5, 6), ValidationError);
}

TEST(OracleFamily, CoarseCurvesCoverAllCrossingValuesOnFourByFour) {
    const auto coarse = coarse_curves(4, 4);
    std::set<std::size_t> cs;
    for (const auto& a : coarse)
        for (const auto& b : coarse) cs.insert(crossing_number(a.to_pl(), b.to_pl(), ContactMode::point_set));
    EXPECT_TRUE(cs.count(0));
    EXPECT_TRUE(cs.count(1));
}
