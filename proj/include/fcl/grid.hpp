#ifndef FCL_GRID_HPP
#define FCL_GRID_HPP

#include "fcl/curve.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fcl {

struct Caps {
    int max_grid = 6;                         // largest width/height enumerated by default
    int grid_ceiling = 8;                     // hard limit (vertex masks are 64 bits)
    std::size_t max_count = 200000;           // enumerated curves
    std::size_t max_oracle_vertices = 20000;  // vertices of the disjointness graph
    std::size_t max_steps = 10000;            // point-push schedule length
};

struct LatticePoint {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// A simple (1,0) cycle of the width x height grid on the torus, stored as the
// lattice points of one lift. The closing step goes from the last point to
// path[0] + (width, 0). Paths are canonical: they start at the smallest torus
// vertex (row-major) and that vertex lies in [0,width) x [0,height).
class GridCurve {
public:
    GridCurve() = default;
    // Throws ValidationError for non-unit steps, a wrong class, or repeated torus vertices.
    GridCurve(int width, int height, std::vector<LatticePoint> path);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<LatticePoint>& path() const { return path_; }

    std::uint64_t vertex_mask() const;
    PLCurve to_pl() const;

    friend bool operator==(const GridCurve& a, const GridCurve& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.path_ == b.path_;
    }
    friend bool operator<(const GridCurve& a, const GridCurve& b) {
        if (a.path_.size() != b.path_.size()) return a.path_.size() < b.path_.size();
        return a.path_ < b.path_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<LatticePoint> path_;
};

void check_grid_size(int width, int height, const Caps& caps);

// nullopt if the curve does not run along grid edges.
std::optional<GridCurve> grid_curve_from_pl(const PLCurve& curve, int width, int height);

// Every simple (1,0) cycle of the grid, in depth-first discovery order.
// Throws CapExceededError (with an estimated total) past caps.max_count.
std::vector<GridCurve> enumerate_grid_curves(int width, int height, const Caps& caps = {});

// Random-walk (Knuth) estimate of the number of simple (1,0) grid cycles.
double estimate_grid_curve_count(int width, int height, std::uint64_t seed, std::size_t samples);

// Curves that move right one column at a time, with a vertical run of at most
// max_step in each column.
std::vector<GridCurve> enumerate_staircase_curves(int width, int height, int max_step, const Caps& caps = {});

// Staircase curves of the (width/2) x (height/2) sublattice, drawn on the full
// grid. Width and height must be even.
std::vector<GridCurve> coarse_curves(int width, int height, const Caps& caps = {});

// Oracle vertex set: staircase curves with step at most 1 together with coarse_curves.
std::vector<GridCurve> oracle_family(int width, int height, const Caps& caps = {});

}  // namespace fcl

#endif  // FCL_GRID_HPP
