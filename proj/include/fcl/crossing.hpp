#ifndef FCL_CROSSING_HPP
#define FCL_CROSSING_HPP

#include "fcl/curve.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcl {

enum class ContactMode {
    // Curves must meet in proper crossings only; anything else throws DegeneracyError.
    transverse,
    // Any common point counts (used for grid curves, which share vertices and edges).
    point_set,
};

struct CrossingResult {
    std::vector<std::int64_t> levels;  // sorted levels k with beta^ meeting gamma^ + k
    bool identical = false;            // beta and gamma are the same curve

    std::size_t count() const { return levels.size(); }
};

CrossingResult crossing_levels(const PLCurve& beta, const PLCurve& gamma,
                               ContactMode mode = ContactMode::transverse);

std::size_t crossing_number(const PLCurve& beta, const PLCurve& gamma,
                            ContactMode mode = ContactMode::transverse);

// C + 1 for distinct curves, 0 for identical ones.
std::size_t torus_distance_formula(const PLCurve& beta, const PLCurve& gamma,
                                   ContactMode mode = ContactMode::transverse);

// Contact points of beta^ + (0, beta_level) with gamma^ + (0, gamma_level) in
// cylinder coordinates (x in [0, 1)), sorted. Collinear overlaps contribute
// their endpoints in point_set mode.
std::vector<Vec2> elevation_contacts(const PLCurve& beta, std::int64_t beta_level, const PLCurve& gamma,
                                     std::int64_t gamma_level, ContactMode mode = ContactMode::transverse);

// The j with p strictly between the lifts curve^ + j and curve^ + j + 1.
// Throws DegeneracyError if p lies on a lift.
std::int64_t lift_strip(const PLCurve& curve, const Vec2& p);

}  // namespace fcl

#endif  // FCL_CROSSING_HPP
