#ifndef FCL_LEDGER_HPP
#define FCL_LEDGER_HPP

#include "fcl/crossing.hpp"
#include "fcl/curve.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fcl {

struct LedgerRow {
    std::size_t n = 0;
    std::int64_t lift_shift = 0;       // chosen elevation of path[n], relative to its level-0 lift
    std::vector<std::int64_t> levels;  // levels of path[0] met by that elevation
    std::int64_t max_abs_level = 0;    // M_n, 0 when levels is empty
    bool violates = false;             // M_n > n - 1
};

// Rows for n = 1..N. The elevation of path[n] is the lift of path[n] in the
// strip directly above the chosen elevation of path[n-1]; path[0] uses its
// level-0 lift. Throws ValidationError naming the first pair of consecutive
// curves that are not disjoint.
std::vector<LedgerRow> geodesic_level_ledger(std::span<const PLCurve> path,
                                             ContactMode mode = ContactMode::point_set);

}  // namespace fcl

#endif  // FCL_LEDGER_HPP
