#ifndef FCL_SEQUENCE_HPP
#define FCL_SEQUENCE_HPP

#include "fcl/curve.hpp"
#include "fcl/grid.hpp"
#include "fcl/level_calculus.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fcl {

enum class SeparatingParity { even, odd };

struct BoundCheck {
    std::string formula;
    std::size_t lower = 0;
    std::size_t upper = 0;

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct DistanceCertificate {
    std::size_t n = 0;
    ProfileKind kind = ProfileKind::torus;
    CrossingProfile profile;
    std::size_t claimed_distance = 0;
    BoundCheck bound_check;
    std::optional<std::size_t> push_step;  // schedule step realizing a nonseparating profile

    friend bool operator==(const DistanceCertificate&, const DistanceCertificate&) = default;
};

// Throws ValidationError for n = 0.
DistanceCertificate build_certificate(std::size_t n, ProfileKind kind,
                                      SeparatingParity parity = SeparatingParity::even);

// Distance bounds re-derived from the profile alone.
BoundCheck derive_bounds(const CrossingProfile& profile);

// alpha_0 .. alpha_n with crossing_number(alpha_0, alpha_k) = k - 1 for k >= 1,
// all meeting transversally.
std::vector<PLCurve> realize_torus_sequence(std::size_t n);

// The same pattern on the 6x6 grid, usable by the oracle. Only n <= 3 fits.
std::vector<GridCurve> realize_torus_sequence_on_grid(std::size_t n);

}  // namespace fcl

#endif  // FCL_SEQUENCE_HPP
