#ifndef FCL_ARCS_HPP
#define FCL_ARCS_HPP

#include "fcl/curve.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcl {

// A polygonal arc in the plane (the universal cover of the torus), given by
// at least two points.
struct PlaneArc {
    std::vector<Vec2> points;
};

// One intersection of the arc with the line-lift L_k = curve^ + (Z, k).
struct ArcCrossing {
    std::size_t segment = 0;  // arc segment index
    Rational t;               // parameter along that segment, in [0, 1]
    Vec2 point;
    std::int64_t level = 0;
    bool endpoint = false;
};

struct BigonReduction {
    std::vector<ArcCrossing> initial;
    std::vector<ArcCrossing> reduced;
    std::vector<std::size_t> count_history;  // intersection count after each deletion
    std::size_t bigons_removed = 0;
    bool degenerate = false;  // both endpoints on the same line-lift
};

// Intersections of the arc with all lifts of the curve, in order along the arc.
// Both arc endpoints must lie on lifts (ValidationError otherwise); any other
// non-transverse contact throws DegeneracyError.
std::vector<ArcCrossing> arc_crossings(const PlaneArc& arc, const PLCurve& curve);

// Iterated innermost-bigon deletion. Two consecutive crossings with the same
// line-lift bound a bigon; deleting it removes both (or only the interior one
// when the other is an arc endpoint).
BigonReduction remove_bigons(const PlaneArc& arc, const PLCurve& curve);

std::vector<std::int64_t> level_sequence(const std::vector<ArcCrossing>& crossings);

}  // namespace fcl

#endif  // FCL_ARCS_HPP
