#include "fcl/cover.hpp"

#include "fcl/errors.hpp"

#include <algorithm>

namespace fcl {

std::vector<Segment> cylinder_segments(const PLCurve& curve) {
    std::vector<Segment> out;
    for (const Segment& s : curve.lift_segments()) {
        // Parameter values where the segment crosses an integer x.
        std::vector<Rational> cuts{Rational(0)};
        if (s.a.x != s.b.x) {
            const Rational lo = std::min(s.a.x, s.b.x);
            const Rational hi = std::max(s.a.x, s.b.x);
            for (std::int64_t m = floor_to_int(lo) + 1; Rational(m) < hi; ++m) {
                cuts.push_back((Rational(m) - s.a.x) / (s.b.x - s.a.x));
            }
        }
        cuts.push_back(Rational(1));
        std::sort(cuts.begin(), cuts.end());
        const Vec2 d = s.b - s.a;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const Vec2 p{s.a.x + cuts[k] * d.x, s.a.y + cuts[k] * d.y};
            const Vec2 r{s.a.x + cuts[k + 1] * d.x, s.a.y + cuts[k + 1] * d.y};
            const Rational shift(floor_to_int((p.x + r.x) / 2));
            out.push_back({{p.x - shift, p.y}, {r.x - shift, r.y}});
        }
    }
    return out;
}

CylinderLift lift_to_cylinder(const PLCurve& curve, const CylinderWindow& window) {
    require_valid(curve);
    const auto [lo, hi] = curve.y_extent();
    if (window.y_hi - window.y_lo < hi - lo) {
        throw SizingError("window [" + format_rational(window.y_lo) + ", " + format_rational(window.y_hi) +
                          "] is shorter than the elevation height " + format_rational(hi - lo));
    }
    // Level k occupies [lo + k, hi + k].
    std::int64_t k_lo = ceil_to_int(window.y_lo - hi);
    std::int64_t k_hi = floor_to_int(window.y_hi - lo);
    k_lo = std::min<std::int64_t>(k_lo, 0);
    k_hi = std::max<std::int64_t>(k_hi, 0);

    const auto base = cylinder_segments(curve);
    CylinderLift lift{curve, {}};
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        Elevation e;
        e.level = k;
        const Vec2 up{Rational(0), Rational(k)};
        for (const auto& s : base) e.segments.push_back(shifted(s, up));
        e.y_min = lo + k;
        e.y_max = hi + k;
        lift.components.push_back(std::move(e));
    }
    return lift;
}

}  // namespace fcl
