#ifndef FCL_COVER_HPP
#define FCL_COVER_HPP

#include "fcl/curve.hpp"

#include <cstdint>
#include <vector>

namespace fcl {

// The cyclic cover of the torus for the class (1,0) is the cylinder
// (x mod 1, y real). Elevation k is the level-0 lift moved up by k.
struct Elevation {
    std::int64_t level = 0;
    std::vector<Segment> segments;  // cylinder coordinates, x in [0, 1]
    Rational y_min;
    Rational y_max;
};

struct CylinderWindow {
    Rational y_lo{-1};
    Rational y_hi{1};
};

struct CylinderLift {
    PLCurve source;
    std::vector<Elevation> components;  // sorted by level, consecutive
};

// Elevations whose y-range meets the window, plus level 0. Throws SizingError
// when the window is shorter than one elevation.
CylinderLift lift_to_cylinder(const PLCurve& curve, const CylinderWindow& window = {});

// Segments of the level-0 lift cut at integer x and moved into the strip 0 <= x <= 1.
std::vector<Segment> cylinder_segments(const PLCurve& curve);

}  // namespace fcl

#endif  // FCL_COVER_HPP
