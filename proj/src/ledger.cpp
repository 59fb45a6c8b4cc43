#include "fcl/ledger.hpp"

#include "fcl/errors.hpp"

#include <cstdlib>

namespace fcl {

std::vector<LedgerRow> geodesic_level_ledger(std::span<const PLCurve> path, ContactMode mode) {
    for (std::size_t n = 0; n < path.size(); ++n) require_valid(path[n], "path[" + std::to_string(n) + "]");
    for (std::size_t n = 0; n + 1 < path.size(); ++n) {
        const auto r = crossing_levels(path[n], path[n + 1], mode);
        if (r.identical || r.count() != 0) {
            throw ValidationError("path[" + std::to_string(n) + "] and path[" + std::to_string(n + 1) +
                                  "] are not disjoint");
        }
    }
    std::vector<LedgerRow> rows;
    std::int64_t shift = 0;
    for (std::size_t n = 1; n < path.size(); ++n) {
        const Vec2 p = path[n].vertices().front().vec();
        shift -= lift_strip(path[n - 1], p);
        LedgerRow row;
        row.n = n;
        row.lift_shift = shift;
        const auto hit = crossing_levels(path[n], path[0], mode);
        if (hit.identical) {
            row.levels = {shift};
        } else {
            for (std::int64_t k : hit.levels) row.levels.push_back(k + shift);
        }
        for (std::int64_t k : row.levels) row.max_abs_level = std::max<std::int64_t>(row.max_abs_level, std::llabs(k));
        row.violates = row.max_abs_level > static_cast<std::int64_t>(n) - 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fcl
