#include "fcl/arcs.hpp"

#include "fcl/errors.hpp"

#include <algorithm>

namespace fcl {

namespace {

Rational param_on(const Segment& s, const Vec2& p) {
    const Vec2 d = s.b - s.a;
    return d.x != 0 ? (p.x - s.a.x) / d.x : (p.y - s.a.y) / d.y;
}

}  // namespace

std::vector<ArcCrossing> arc_crossings(const PlaneArc& arc, const PLCurve& curve) {
    if (arc.points.size() < 2) throw ValidationError("an arc needs at least two points");
    require_valid(curve);
    const auto gs = curve.lift_segments();
    std::vector<Box> gboxes;
    for (const auto& g : gs) gboxes.push_back(bounding_box(g));

    const Vec2& first = arc.points.front();
    const Vec2& last = arc.points.back();
    const std::size_t nseg = arc.points.size() - 1;
    std::vector<ArcCrossing> out;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Segment s{arc.points[i], arc.points[i + 1]};
        if (s.a == s.b) throw ValidationError("arc segment " + std::to_string(i) + " has zero length");
        const Box sb = bounding_box(s);
        for (std::size_t j = 0; j < gs.size(); ++j) {
            const auto r = overlapping_translations(sb, gboxes[j]);
            for (std::int64_t a = r.ax_lo; a <= r.ax_hi; ++a) {
                for (std::int64_t k = r.by_lo; k <= r.by_hi; ++k) {
                    const Contact c = classify_contact(s, shifted(gs[j], {Rational(a), Rational(k)}));
                    if (c.kind == ContactKind::none) continue;
                    const bool at_end = c.point && ((i == 0 && *c.point == first) || (i + 1 == nseg && *c.point == last));
                    if (c.kind != ContactKind::proper && !at_end) {
                        throw DegeneracyError("arc segment " + std::to_string(i) +
                                              " meets the curve lifts non-transversally");
                    }
                    out.push_back({i, param_on(s, *c.point), *c.point, k, at_end});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ArcCrossing& x, const ArcCrossing& y) {
        if (x.segment != y.segment) return x.segment < y.segment;
        return x.t < y.t;
    });
    // An endpoint at a curve vertex is reported by both adjacent curve segments.
    out.erase(std::unique(out.begin(), out.end(),
                          [](const ArcCrossing& x, const ArcCrossing& y) {
                              return x.point == y.point && x.level == y.level;
                          }),
              out.end());
    const bool starts = !out.empty() && out.front().endpoint && out.front().point == first;
    const bool ends = !out.empty() && out.back().endpoint && out.back().point == last;
    if (!starts || !ends) throw ValidationError("arc endpoints must lie on lifts of the curve");
    return out;
}

BigonReduction remove_bigons(const PlaneArc& arc, const PLCurve& curve) {
    BigonReduction r;
    r.initial = arc_crossings(arc, curve);
    r.reduced = r.initial;
    r.count_history.push_back(r.reduced.size());
    for (;;) {
        auto& xs = r.reduced;
        std::size_t i = 0;
        while (i + 1 < xs.size() && xs[i].level != xs[i + 1].level) ++i;
        if (i + 1 >= xs.size()) break;
        const bool a_end = xs[i].endpoint;
        const bool b_end = xs[i + 1].endpoint;
        if (a_end && b_end) {
            r.degenerate = true;
            break;
        }
        if (!a_end && !b_end) {
            xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.begin() + static_cast<std::ptrdiff_t>(i + 2));
        } else {
            xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(a_end ? i + 1 : i));
        }
        ++r.bigons_removed;
        r.count_history.push_back(xs.size());
    }
    return r;
}

std::vector<std::int64_t> level_sequence(const std::vector<ArcCrossing>& crossings) {
    std::vector<std::int64_t> out;
    out.reserve(crossings.size());
    for (const auto& c : crossings) out.push_back(c.level);
    return out;
}

}  // namespace fcl
