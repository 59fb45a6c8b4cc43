#include "fcl/crossing.hpp"

#include "fcl/errors.hpp"

#include <algorithm>
#include <set>

namespace fcl {

namespace {

// Calls f(i, j, a, k, contact) for every segment i of bs meeting segment j of
// gs translated by (a, k).
template <typename F>
void for_each_contact(const std::vector<Segment>& bs, const std::vector<Segment>& gs, F&& f) {
    std::vector<Box> gboxes;
    gboxes.reserve(gs.size());
    for (const auto& g : gs) gboxes.push_back(bounding_box(g));
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const Box bb = bounding_box(bs[i]);
        for (std::size_t j = 0; j < gs.size(); ++j) {
            const auto r = overlapping_translations(bb, gboxes[j]);
            for (std::int64_t a = r.ax_lo; a <= r.ax_hi; ++a) {
                for (std::int64_t k = r.by_lo; k <= r.by_hi; ++k) {
                    const Contact c = classify_contact(bs[i], shifted(gs[j], {Rational(a), Rational(k)}));
                    if (c.kind != ContactKind::none) f(i, j, a, k, c);
                }
            }
        }
    }
}

[[noreturn]] void throw_degenerate(std::size_t i, std::size_t j, std::int64_t a, std::int64_t k, const Contact& c) {
    std::string what = "segment " + std::to_string(i) + " of beta and segment " + std::to_string(j) +
                       " of gamma (translate " + std::to_string(a) + "," + std::to_string(k) + ") ";
    if (c.kind == ContactKind::overlap) {
        what += "overlap along a collinear piece";
    } else {
        what += "touch without crossing at (" + format_rational(c.point->x) + ", " + format_rational(c.point->y) + ")";
    }
    throw DegeneracyError(what);
}

}  // namespace

CrossingResult crossing_levels(const PLCurve& beta, const PLCurve& gamma, ContactMode mode) {
    require_valid(beta, "beta");
    require_valid(gamma, "gamma");
    CrossingResult result;
    if (same_curve(beta, gamma)) {
        result.identical = true;
        return result;
    }
    std::set<std::int64_t> levels;
    for_each_contact(beta.lift_segments(), gamma.lift_segments(),
                     [&](std::size_t i, std::size_t j, std::int64_t a, std::int64_t k, const Contact& c) {
                         if (mode == ContactMode::transverse && c.kind != ContactKind::proper) {
                             throw_degenerate(i, j, a, k, c);
                         }
                         levels.insert(k);
                     });
    result.levels.assign(levels.begin(), levels.end());
    return result;
}

std::size_t crossing_number(const PLCurve& beta, const PLCurve& gamma, ContactMode mode) {
    return crossing_levels(beta, gamma, mode).count();
}

std::size_t torus_distance_formula(const PLCurve& beta, const PLCurve& gamma, ContactMode mode) {
    const auto r = crossing_levels(beta, gamma, mode);
    return r.identical ? 0 : r.count() + 1;
}

std::vector<Vec2> elevation_contacts(const PLCurve& beta, std::int64_t beta_level, const PLCurve& gamma,
                                     std::int64_t gamma_level, ContactMode mode) {
    require_valid(beta, "beta");
    require_valid(gamma, "gamma");
    const Vec2 up{Rational(0), Rational(beta_level)};
    std::vector<Segment> bs = beta.lift_segments();
    for (auto& s : bs) s = shifted(s, up);
    const std::vector<Segment> gs = gamma.lift_segments();
    std::vector<Vec2> points;
    auto add = [&](const Vec2& p) {
        Vec2 q{frac(p.x), p.y};
        points.push_back(q);
    };
    for_each_contact(bs, gs, [&](std::size_t i, std::size_t j, std::int64_t a, std::int64_t k, const Contact& c) {
        if (k != gamma_level) return;
        if (mode == ContactMode::transverse && c.kind != ContactKind::proper) throw_degenerate(i, j, a, k, c);
        if (c.point) {
            add(*c.point);
            return;
        }
        // Collinear overlap: record the two ends of the shared piece.
        const Segment g = shifted(gs[j], {Rational(a), Rational(k)});
        for (const Vec2* p : std::initializer_list<const Vec2*>{&bs[i].a, &bs[i].b, &g.a, &g.b}) {
            if (on_segment(bs[i].a, bs[i].b, *p) && on_segment(g.a, g.b, *p)) add(*p);
        }
    });
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::int64_t lift_strip(const PLCurve& curve, const Vec2& p) {
    const auto segs = curve.lift_segments();
    const auto [ylo, yhi] = curve.y_extent();

    // Signed crossings of the vertical line x = p.x with the periodic lift,
    // and every height at which the line touches it.
    std::vector<std::pair<Rational, int>> crossings;
    std::vector<std::pair<Rational, Rational>> touches;
    for (const auto& s0 : segs) {
        const Box b0 = bounding_box(s0);
        for (std::int64_t a = ceil_to_int(b0.xmin - p.x); a <= floor_to_int(b0.xmax - p.x); ++a) {
            const Segment s = shifted(s0, {Rational(-a), Rational(0)});
            if (s.a.x == s.b.x) {
                touches.emplace_back(std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y));
                continue;
            }
            const Rational y = s.a.y + (p.x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
            touches.emplace_back(y, y);
            if (s.a.x <= p.x && p.x < s.b.x) crossings.emplace_back(y, 1);
            if (s.b.x <= p.x && p.x < s.a.x) crossings.emplace_back(y, -1);
        }
    }
    auto above = [&](const Rational& y) {
        for (const auto& [lo, hi] : touches) {
            if (lo <= y && y <= hi) throw DegeneracyError("point lies on a lift of the curve");
        }
        int count = 0;
        for (const auto& [yc, sign] : crossings) {
            if (yc < y) count += sign;
        }
        return count == 1;
    };
    // p - (0, j) is above the level-0 lift for every j up to the answer.
    for (std::int64_t j = ceil_to_int(p.y - ylo) + 1; j >= floor_to_int(p.y - yhi) - 1; --j) {
        if (above(p.y - j)) return j;
    }
    throw DegeneracyError("could not place point relative to the curve lifts");
}

}  // namespace fcl
