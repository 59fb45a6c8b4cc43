#ifndef FCL_ORACLE_HPP
#define FCL_ORACLE_HPP

#include "fcl/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fcl {

// Symmetric bit matrix: bit (i, j) set when curves i and j share no grid vertex.
class DisjointnessMatrix {
public:
    DisjointnessMatrix() = default;
    explicit DisjointnessMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    bool disjoint(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
    std::size_t words_per_row() const { return words_; }

    friend bool operator==(const DisjointnessMatrix&, const DisjointnessMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

DisjointnessMatrix disjointness_matrix_serial(std::span<const std::uint64_t> masks);
DisjointnessMatrix disjointness_matrix_parallel(std::span<const std::uint64_t> masks);

struct BfsTree {
    std::vector<std::int32_t> dist;    // -1 when unreachable
    std::vector<std::int32_t> parent;  // -1 at the source and when unreachable
};

// Neighbors are scanned in increasing index order, so parents are deterministic.
BfsTree bfs(const DisjointnessMatrix& graph, std::size_t source);

// Vertices from source back along parents, reversed: source first.
std::vector<std::size_t> tree_path(const BfsTree& tree, std::size_t source, std::size_t target);

// Row-major |sources| x n distance table.
std::vector<std::int32_t> distance_rows_serial(const DisjointnessMatrix& graph, std::span<const std::size_t> sources);
std::vector<std::int32_t> distance_rows_parallel(const DisjointnessMatrix& graph,
                                                 std::span<const std::size_t> sources);

// Row-major point-set crossing numbers; -1 marks identical curves.
std::vector<std::int32_t> crossing_matrix_serial(std::span<const PLCurve> curves);
std::vector<std::int32_t> crossing_matrix_parallel(std::span<const PLCurve> curves);

enum class OracleVertices {
    family,  // oracle_family(width, height)
    full,    // enumerate_grid_curves(width, height)
};

class OracleGraph {
public:
    OracleGraph(int width, int height, OracleVertices kind = OracleVertices::family, const Caps& caps = {});

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<GridCurve>& curves() const { return curves_; }
    const DisjointnessMatrix& matrix() const { return matrix_; }

    std::optional<std::size_t> index_of(const GridCurve& curve) const;

    // Returns the index of the curve, adding it (and its edges) if new.
    std::size_t ensure(const GridCurve& curve);

private:
    int width_;
    int height_;
    std::vector<GridCurve> curves_;
    std::vector<std::uint64_t> masks_;
    DisjointnessMatrix matrix_;
};

struct OracleResult {
    std::optional<std::size_t> distance;  // nullopt when unreachable
    std::vector<GridCurve> geodesic;      // beta first, gamma last
};

OracleResult bfs_oracle_distance(OracleGraph& graph, const GridCurve& beta, const GridCurve& gamma);

// Throws ValidationError if either curve is not a grid curve of width x height.
OracleResult bfs_oracle_distance(const PLCurve& beta, const PLCurve& gamma, int width, int height,
                                 OracleVertices kind = OracleVertices::family, const Caps& caps = {});

}  // namespace fcl

#endif  // FCL_ORACLE_HPP
