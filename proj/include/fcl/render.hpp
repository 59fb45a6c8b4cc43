#ifndef FCL_RENDER_HPP
#define FCL_RENDER_HPP

#include "fcl/curve.hpp"

#include <array>
#include <string>
#include <vector>

namespace fcl {

// Level k is drawn in kLevelPalette[k mod 8]; level 0 is drawn thicker.
inline constexpr std::array<const char*, 8> kLevelPalette = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};

// SVG of the cylinder strip 0 <= x <= 1, -window <= y <= window, with every
// elevation of each curve in that range labelled by curve index and level.
std::string render_cover(const std::vector<PLCurve>& curves, int window = 2);

}  // namespace fcl

#endif  // FCL_RENDER_HPP
