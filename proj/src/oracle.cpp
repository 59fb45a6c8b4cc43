#include "fcl/oracle.hpp"

#include "fcl/crossing.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <deque>

namespace fcl {

DisjointnessMatrix disjointness_matrix_serial(std::span<const std::uint64_t> masks) {
    const std::size_t n = masks.size();
    DisjointnessMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((masks[i] & masks[j]) == 0) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    }
    return m;
}

DisjointnessMatrix disjointness_matrix_parallel(std::span<const std::uint64_t> masks) {
    const std::size_t n = masks.size();
    DisjointnessMatrix m(n);
    // Each thread writes whole rows only.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && (masks[i] & masks[j]) == 0) m.set(i, j);
        }
    }
    return m;
}

BfsTree bfs(const DisjointnessMatrix& graph, std::size_t source) {
    const std::size_t n = graph.size();
    BfsTree t{std::vector<std::int32_t>(n, -1), std::vector<std::int32_t>(n, -1)};
    // Bitset of vertices not yet reached, so each row scan skips visited words.
    std::vector<std::uint64_t> unseen(graph.words_per_row(), ~std::uint64_t{0});
    if (n % 64) unseen.back() = (std::uint64_t{1} << (n % 64)) - 1;
    auto mark = [&](std::size_t v) { unseen[v / 64] &= ~(std::uint64_t{1} << (v % 64)); };
    std::deque<std::size_t> queue{source};
    t.dist[source] = 0;
    mark(source);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        const std::uint64_t* row = graph.row(u);
        for (std::size_t w = 0; w < unseen.size(); ++w) {
            std::uint64_t bits = row[w] & unseen[w];
            while (bits) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                t.dist[v] = t.dist[u] + 1;
                t.parent[v] = static_cast<std::int32_t>(u);
                mark(v);
                queue.push_back(v);
            }
        }
    }
    return t;
}

std::vector<std::size_t> tree_path(const BfsTree& tree, std::size_t source, std::size_t target) {
    if (tree.dist[target] < 0) return {};
    std::vector<std::size_t> path{target};
    while (path.back() != source) path.push_back(static_cast<std::size_t>(tree.parent[path.back()]));
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::int32_t> distance_rows_serial(const DisjointnessMatrix& graph, std::span<const std::size_t> sources) {
    const std::size_t n = graph.size();
    std::vector<std::int32_t> out(sources.size() * n);
    for (std::size_t s = 0; s < sources.size(); ++s) {
        const auto t = bfs(graph, sources[s]);
        std::copy(t.dist.begin(), t.dist.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    return out;
}

std::vector<std::int32_t> distance_rows_parallel(const DisjointnessMatrix& graph,
                                                 std::span<const std::size_t> sources) {
    const std::size_t n = graph.size();
    std::vector<std::int32_t> out(sources.size() * n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t ss = 0; ss < static_cast<std::ptrdiff_t>(sources.size()); ++ss) {
        const auto s = static_cast<std::size_t>(ss);
        const auto t = bfs(graph, sources[s]);
        std::copy(t.dist.begin(), t.dist.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    return out;
}

namespace {

std::int32_t crossing_entry(const PLCurve& a, const PLCurve& b) {
    const auto r = crossing_levels(a, b, ContactMode::point_set);
    return r.identical ? -1 : static_cast<std::int32_t>(r.count());
}

}  // namespace

std::vector<std::int32_t> crossing_matrix_serial(std::span<const PLCurve> curves) {
    const std::size_t n = curves.size();
    std::vector<std::int32_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = crossing_entry(curves[i], curves[j]);
    }
    return out;
}

std::vector<std::int32_t> crossing_matrix_parallel(std::span<const PLCurve> curves) {
    const std::size_t n = curves.size();
    std::vector<std::int32_t> out(n * n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = crossing_entry(curves[i], curves[j]);
    }
    return out;
}

OracleGraph::OracleGraph(int width, int height, OracleVertices kind, const Caps& caps)
    : width_(width), height_(height) {
    check_grid_size(width, height, caps);
    curves_ = kind == OracleVertices::family ? oracle_family(width, height, caps)
                                             : enumerate_grid_curves(width, height, caps);
    if (curves_.size() > caps.max_oracle_vertices) {
        throw CapExceededError(std::to_string(curves_.size()) + " oracle vertices exceed the cap " +
                               std::to_string(caps.max_oracle_vertices));
    }
    masks_.reserve(curves_.size());
    for (const auto& c : curves_) masks_.push_back(c.vertex_mask());
    matrix_ = disjointness_matrix_parallel(masks_);
}

std::optional<std::size_t> OracleGraph::index_of(const GridCurve& curve) const {
    const auto it = std::find(curves_.begin(), curves_.end(), curve);
    if (it == curves_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - curves_.begin());
}

std::size_t OracleGraph::ensure(const GridCurve& curve) {
    if (auto idx = index_of(curve)) return *idx;
    if (curve.width() != width_ || curve.height() != height_) {
        throw ValidationError("curve belongs to a different grid");
    }
    curves_.push_back(curve);
    masks_.push_back(curve.vertex_mask());
    matrix_ = disjointness_matrix_parallel(masks_);
    return curves_.size() - 1;
}

OracleResult bfs_oracle_distance(OracleGraph& graph, const GridCurve& beta, const GridCurve& gamma) {
    const std::size_t b = graph.ensure(beta);
    const std::size_t g = graph.ensure(gamma);
    const auto tree = bfs(graph.matrix(), b);
    OracleResult r;
    if (tree.dist[g] < 0) return r;
    r.distance = static_cast<std::size_t>(tree.dist[g]);
    for (std::size_t v : tree_path(tree, b, g)) r.geodesic.push_back(graph.curves()[v]);
    return r;
}

OracleResult bfs_oracle_distance(const PLCurve& beta, const PLCurve& gamma, int width, int height,
                                 OracleVertices kind, const Caps& caps) {
    const auto gb = grid_curve_from_pl(beta, width, height);
    if (!gb) throw ValidationError("beta is not a curve of the " + std::to_string(width) + "x" + std::to_string(height) + " grid");
    const auto gg = grid_curve_from_pl(gamma, width, height);
    if (!gg) throw ValidationError("gamma is not a curve of the " + std::to_string(width) + "x" + std::to_string(height) + " grid");
    OracleGraph graph(width, height, kind, caps);
    return bfs_oracle_distance(graph, *gb, *gg);
}

}  // namespace fcl
