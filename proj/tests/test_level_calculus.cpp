#include "fcl/errors.hpp"
#include "fcl/level_calculus.hpp"
#include "fcl/pointpush.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace fcl;

namespace {

using Levels = std::vector<std::int64_t>;

Classification classify(Levels l, bool degenerate = false) { return classify_list({std::move(l), degenerate}); }

// Every list over [-r, r] of length <= max_len, labelled by construction.
std::map<Levels, std::string> constructive_shapes(int r, std::size_t max_len) {
    std::map<Levels, std::string> out;
    // Monotone: unit steps in one direction.
    for (int start = -r; start <= r; ++start) {
        for (int dir : {-1, 1}) {
            Levels l{start};
            out[l] = "Monotone";
            for (std::size_t len = 2; len <= max_len; ++len) {
                const int next = static_cast<int>(l.back()) + dir;
                if (next < -r || next > r) break;
                l.push_back(next);
                out[l] = "Monotone";
            }
        }
    }
    // Vee: s * (a, a-1, ..., m, m, m+1, ..., b) with m >= 1.
    for (int s : {-1, 1}) {
        for (int m = 1; m <= r; ++m) {
            for (int a = m; a <= r; ++a) {
                for (int b = m; b <= r; ++b) {
                    Levels l;
                    for (int v = a; v >= m; --v) l.push_back(s * v);
                    for (int v = m; v <= b; ++v) l.push_back(s * v);
                    if (l.size() > max_len) continue;
                    out[l] = l.size() == 2 ? "DegeneratePair" : "Vee(" + std::to_string(a - m + 1) + ")";
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(ClassifyList, ExamplesFromSampleLists) {
    EXPECT_EQ(classify({-3, -2, -1, 0}).describe(), "Monotone");
    EXPECT_EQ(classify({-3, -2, -2, -3}).describe(), "Vee(2)");
    EXPECT_EQ(classify({2, 1, 1, 2}).describe(), "Vee(2)");
    EXPECT_EQ(classify({-1, -1}, true).describe(), "DegeneratePair");
    EXPECT_EQ(classify({-1, -1}).describe(), "DegeneratePair");
    const auto zero = classify({0, 0});
    EXPECT_EQ(zero.shape, ListShape::invalid);
    EXPECT_NE(zero.reason.find("cannot be 0"), std::string::npos);
    const auto jump = classify({1, 3});
    EXPECT_EQ(jump.shape, ListShape::invalid);
    EXPECT_NE(jump.reason.find("not 1"), std::string::npos);
}

TEST(ClassifyList, InvalidReasons) {
    EXPECT_EQ(classify({}).reason, "empty list");
    EXPECT_EQ(classify({1, 2}, true).shape, ListShape::invalid);
    EXPECT_NE(classify({1, 2, 1}).reason.find("changes direction"), std::string::npos);
    EXPECT_NE(classify({2, 2, 1, 1}).reason.find("more than one"), std::string::npos);
    EXPECT_NE(classify({1, 2, 2, 3}).reason.find("decreasing"), std::string::npos);
    EXPECT_NE(classify({3, 2, 2, 1}).reason.find("increasing"), std::string::npos);
}

TEST(ClassifyList, MatchesConstructiveEnumeration) {
    const int r = 3;
    const std::size_t max_len = 6;
    const auto shapes = constructive_shapes(r, max_len);
    std::size_t total = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        Levels l(len, -r);
        for (;;) {
            const auto c = classify(l);
            const auto it = shapes.find(l);
            if (it == shapes.end()) {
                EXPECT_EQ(c.shape, ListShape::invalid) << c.describe();
            } else {
                EXPECT_EQ(c.describe(), it->second);
            }
            ++total;
            std::size_t i = 0;
            while (i < len && l[i] == r) l[i++] = -r;
            if (i == len) break;
            ++l[i];
        }
    }
    EXPECT_GT(total, 100000u);
}

TEST(ClassifyList, ReversalMirrorsPivot) {
    for (const auto& l : std::vector<Levels>{{-3, -2, -2, -3}, {3, 2, 1, 1, 2}, {-1, -1, -2, -3, -4}, {4, 3, 3}}) {
        const auto c = classify(l);
        ASSERT_EQ(c.shape, ListShape::vee);
        Levels rev(l.rbegin(), l.rend());
        const auto cr = classify(rev);
        ASSERT_EQ(cr.shape, ListShape::vee);
        EXPECT_EQ(cr.pivot, l.size() - c.pivot);
    }
}

TEST(EssentialCount, Examples) {
    const auto mono = essential_count({{1, 2, 3}, false});
    EXPECT_EQ(mono.count, 3u);
    EXPECT_EQ(mono.endpoint_case, 1);
    const auto across = essential_count({{1, 0, -1}, false});
    EXPECT_EQ(across.count, 3u);
    EXPECT_EQ(across.endpoint_case, 2);
    const auto rep = essential_count({{1, 1, 2}, false});
    EXPECT_EQ(rep.count, 3u);
    EXPECT_EQ(rep.endpoint_case, 3);
    EXPECT_EQ(essential_count({{-1, -1}, true}).count, 1u);
    EXPECT_EQ(essential_count({{-4, -3, -2}, false}).count, 3u);
    EXPECT_FALSE(essential_count({{-4, -3, -2}, false}).endpoint_case.has_value());
    EXPECT_THROW(essential_count({{1, 3}, false}), ValidationError);
}

TEST(EssentialCount, ReversedListSameCase) {
    const auto fwd = essential_count({{1, 1, 2}, false});
    const auto rev = essential_count({{2, 1, 1}, false});
    EXPECT_EQ(fwd.count, rev.count);
    EXPECT_EQ(fwd.endpoint_case, rev.endpoint_case);
}

TEST(SeparatingLevels, Examples) {
    EXPECT_TRUE(validate_separating_levels({0, 1, 2, -1}).ok);
    const auto r = validate_separating_levels({0, 1, 2});
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.missing, -1);
    EXPECT_TRUE(validate_separating_levels({}).ok);
}

TEST(SeparatingLevels, ValidSetsAreBalancedIntervals) {
    // Valid: an interval [a, b] containing 0 with |a + b| <= 1.
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
        LevelSet s;
        for (int i = 0; i < 9; ++i)
            if (mask >> i & 1) s.insert(i - 4);
        bool expected = s.empty();
        if (!s.empty()) {
            const auto a = *s.begin();
            const auto b = *s.rbegin();
            expected = static_cast<std::int64_t>(s.size()) == b - a + 1 && a <= 0 && b >= 0 && std::llabs(a + b) <= 1;
        }
        EXPECT_EQ(validate_separating_levels(s).ok, expected) << mask;
    }
}

TEST(SeparatingLevels, MirrorClosureFixedPoints) {
    EXPECT_EQ(mirror_level(2), -1);
    EXPECT_EQ(mirror_level(1), 0);
    EXPECT_EQ(mirror_level(-1), 0);
    EXPECT_EQ(mirror_level(-3), 2);
    for (std::int64_t lo = -4; lo <= 0; ++lo) {
        for (std::int64_t hi = 0; hi <= 4; ++hi) {
            LevelSet s;
            for (auto k = lo; k <= hi; ++k) s.insert(k);
            EXPECT_EQ(validate_separating_levels(s).ok, mirror_closure_step(s) == s) << lo << ".." << hi;
        }
    }
    // Closing {0,1,2} once adds -1, which is then closed.
    const auto once = mirror_closure_step({0, 1, 2});
    EXPECT_EQ(once, (LevelSet{-1, 0, 1, 2}));
    EXPECT_EQ(mirror_closure_step(once), once);
}

TEST(Profiles, SeparatingDistance) {
    EXPECT_EQ(separating_distance({0, 0, ProfileKind::separating, false}), 1u);
    EXPECT_EQ(separating_distance({3, 3, ProfileKind::separating, false}), 3u);
    EXPECT_EQ(separating_distance({4, 4, ProfileKind::separating, false}), 3u);
    EXPECT_THROW(separating_distance({3, 2, ProfileKind::separating, false}), InvariantError);
}

TEST(Profiles, NonseparatingBounds) {
    const auto b32 = nonseparating_bounds({3, 2, ProfileKind::nonseparating, false});
    EXPECT_EQ(b32.lower, 3u);
    EXPECT_EQ(b32.upper, 3u);
    const auto b22 = nonseparating_bounds({2, 2, ProfileKind::nonseparating, false});
    EXPECT_EQ(b22.lower, 2u);
    EXPECT_EQ(b22.upper, 3u);
    const auto b00 = nonseparating_bounds({0, 0, ProfileKind::nonseparating, false});
    EXPECT_EQ(b00.lower, 1u);
    EXPECT_EQ(b00.upper, 1u);
    EXPECT_THROW(nonseparating_bounds({4, 2, ProfileKind::nonseparating, false}), InvariantError);
}

TEST(Profiles, Feasibility) {
    EXPECT_TRUE(profile_feasible({3, 2, ProfileKind::nonseparating, false}));
    EXPECT_FALSE(profile_feasible({4, 2, ProfileKind::nonseparating, false}));
    EXPECT_FALSE(profile_feasible({3, 0, ProfileKind::nonseparating, false}));
    for (std::size_t n = 2; n <= 50; ++n) {
        EXPECT_TRUE(profile_feasible({2 * n - 1, n, ProfileKind::nonseparating, false}));
        EXPECT_TRUE(profile_feasible({2 * n - 2, n, ProfileKind::nonseparating, false}));
        EXPECT_FALSE(profile_feasible({2 * n + 2, n, ProfileKind::nonseparating, false}));
    }
    EXPECT_THROW(profile_feasible({3, 3, ProfileKind::torus, false}), ValidationError);
}

TEST(Profiles, FeasibilityAgreesWithDirectInequality) {
    for (std::size_t a = 1; a <= 30; ++a)
        for (std::size_t b = 1; b <= 30; ++b)
            EXPECT_EQ(profile_feasible({a, b, ProfileKind::nonseparating, false}), std::max(a, b) / 2 + 1 <= std::min(a, b));
}

TEST(Profiles, PushTraceProfilesAreFeasible) {
    for (const auto& row : run_schedule(60)) {
        EXPECT_TRUE(profile_feasible(row.profile)) << row.step;
        EXPECT_NO_THROW(check_profile(row.profile));
    }
}

TEST(Profiles, KindParsing) {
    EXPECT_EQ(parse_profile_kind("sep"), ProfileKind::separating);
    EXPECT_EQ(parse_profile_kind("nonsep"), ProfileKind::nonseparating);
    EXPECT_EQ(parse_profile_kind("torus"), ProfileKind::torus);
    EXPECT_THROW(parse_profile_kind("genus"), ValidationError);
}

TEST(SurgeryPath, SeparatingExamples) {
    const auto p3 = surgery_path({-1, 0, 1}, ProfileKind::separating);
    EXPECT_EQ(p3.sets, (std::vector<LevelSet>{{-1, 0, 1}, {-1, 0}, {}}));
    EXPECT_EQ(p3.min_transitions, 3u);
    EXPECT_EQ(surgery_path({-2, -1, 0, 1, 2}, ProfileKind::separating).min_transitions, 4u);
    EXPECT_EQ(surgery_path({0}, ProfileKind::separating).min_transitions, 2u);
    EXPECT_THROW(surgery_path({0, 1, 2}, ProfileKind::separating), ValidationError);
}

TEST(SurgeryPath, SeparatingLengthsMatchDistanceAndStayValid) {
    for (std::size_t c = 0; c <= 12; ++c) {
        LevelSet s;
        const auto lo = -static_cast<std::int64_t>(c / 2);
        for (std::size_t i = 0; i < c; ++i) s.insert(lo + static_cast<std::int64_t>(i));
        const auto p = surgery_path(s, ProfileKind::separating);
        EXPECT_EQ(p.min_transitions, separating_distance({c, c, ProfileKind::separating, false})) << c;
        EXPECT_EQ(p.min_transitions, (c + 1) / 2 + 1);
        EXPECT_TRUE(p.sets.back().empty());
        for (const auto& step : p.sets) EXPECT_TRUE(validate_separating_levels(step).ok);
    }
}

TEST(SurgeryPath, TorusRemovesOneOutermostLevelPerStep) {
    const auto p = surgery_path({-1, 0, 1}, ProfileKind::torus);
    EXPECT_EQ(p.sets.size(), 4u);
    EXPECT_EQ(p.min_transitions, 4u);
    EXPECT_EQ(p.max_transitions, 4u);
}

TEST(SurgeryPath, NonseparatingTagsGiveInterval) {
    const auto uniform = surgery_path({-1, 0, 1, 2}, ProfileKind::nonseparating);
    EXPECT_EQ(uniform.min_transitions, 5u);
    EXPECT_EQ(uniform.max_transitions, 5u);
    EXPECT_EQ(uniform.sets[1], (LevelSet{-1, 0, 1}));
    const auto mixed = surgery_path({-1, 0, 1, 2}, ProfileKind::nonseparating, {{-1, OutermostTag::away_from_end}});
    EXPECT_EQ(mixed.sets[1], (LevelSet{0, 1}));
    EXPECT_LT(mixed.min_transitions, mixed.max_transitions);
    EXPECT_THROW(surgery_path({0, 2}, ProfileKind::nonseparating), ValidationError);
}
