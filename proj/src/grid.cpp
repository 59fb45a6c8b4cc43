#include "fcl/grid.hpp"

#include "fcl/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace fcl {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int floor_div(int a, int m) { return (a - mod(a, m)) / m; }

int torus_id(const LatticePoint& p, int w, int h) { return mod(p.j, h) * w + mod(p.i, w); }

bool unit_step(const LatticePoint& a, const LatticePoint& b) {
    return std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1;
}

}  // namespace

GridCurve::GridCurve(int width, int height, std::vector<LatticePoint> path) : width_(width), height_(height) {
    if (width < 1 || height < 1 || width * height > 64) {
        throw ValidationError("grid " + std::to_string(width) + "x" + std::to_string(height) + " is out of range");
    }
    const std::size_t m = path.size();
    if (m == 0) throw ValidationError("grid curve has no vertices");
    std::uint64_t seen = 0;
    std::size_t start = 0;
    int best = width * height;
    for (std::size_t k = 0; k < m; ++k) {
        const LatticePoint next = k + 1 < m ? path[k + 1] : LatticePoint{path[0].i + width, path[0].j};
        if (!unit_step(path[k], next)) {
            throw ValidationError("grid curve step " + std::to_string(k) + " is not a unit grid edge");
        }
        const int id = torus_id(path[k], width, height);
        if (seen & (std::uint64_t{1} << id)) {
            throw ValidationError("grid curve visits torus vertex " + std::to_string(id) + " twice");
        }
        seen |= std::uint64_t{1} << id;
        if (id < best) {
            best = id;
            start = k;
        }
    }
    // Rotate to the smallest vertex and move that vertex into the fundamental domain.
    const int si = floor_div(path[start].i, width) * width;
    const int sj = floor_div(path[start].j, height) * height;
    path_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t idx = (start + k) % m;
        const int wrap = start + k >= m ? width : 0;
        path_.push_back({path[idx].i + wrap - si, path[idx].j - sj});
    }
}

std::uint64_t GridCurve::vertex_mask() const {
    std::uint64_t mask = 0;
    for (const auto& p : path_) mask |= std::uint64_t{1} << torus_id(p, width_, height_);
    return mask;
}

PLCurve GridCurve::to_pl() const {
    const std::size_t m = path_.size();
    auto at = [&](std::size_t k) {
        const LatticePoint p = k < m ? path_[k] : LatticePoint{path_[k - m].i + width_, path_[k - m].j};
        return p;
    };
    std::vector<Vec2> points;
    for (std::size_t k = 0; k < m; ++k) {
        // Keep only corners; straight runs become single segments.
        const LatticePoint prev = k == 0 ? LatticePoint{path_[m - 1].i - width_, path_[m - 1].j} : path_[k - 1];
        const LatticePoint cur = path_[k];
        const LatticePoint next = at(k + 1);
        const bool straight = cur.i - prev.i == next.i - cur.i && cur.j - prev.j == next.j - cur.j;
        if (!straight) points.push_back({make_rational(cur.i, width_), make_rational(cur.j, height_)});
    }
    if (points.empty()) points.push_back({make_rational(path_[0].i, width_), make_rational(path_[0].j, height_)});
    return PLCurve::from_lift(points, {1, 0});
}

void check_grid_size(int width, int height, const Caps& caps) {
    if (width < 2 || height < 2) throw ValidationError("grid dimensions must be at least 2");
    if (caps.grid_ceiling > 8) throw ValidationError("grid ceiling cannot exceed 8");
    const int limit = std::min(caps.max_grid, caps.grid_ceiling);
    if (width > limit || height > limit) {
        throw CapExceededError("grid " + std::to_string(width) + "x" + std::to_string(height) +
                               " exceeds the cap " + std::to_string(limit));
    }
}

std::optional<GridCurve> grid_curve_from_pl(const PLCurve& curve, int width, int height) {
    if (!validate_curve(curve).ok()) return std::nullopt;
    const auto q = curve.lift_points();
    std::vector<LatticePoint> lattice;
    for (const auto& p : q) {
        const Rational x = p.x * width;
        const Rational y = p.y * height;
        if (x.get_den() != 1 || y.get_den() != 1) return std::nullopt;
        lattice.push_back({static_cast<int>(x.get_num().get_si()), static_cast<int>(y.get_num().get_si())});
    }
    std::vector<LatticePoint> path;
    for (std::size_t k = 0; k + 1 < lattice.size(); ++k) {
        const LatticePoint a = lattice[k];
        const LatticePoint b = lattice[k + 1];
        if (a.i != b.i && a.j != b.j) return std::nullopt;
        const int di = (b.i > a.i) - (b.i < a.i);
        const int dj = (b.j > a.j) - (b.j < a.j);
        for (LatticePoint p = a; !(p == b); p = {p.i + di, p.j + dj}) path.push_back(p);
    }
    try {
        return GridCurve(width, height, std::move(path));
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

namespace {

constexpr LatticePoint kMoves[4] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};

struct CycleSearch {
    int w;
    int h;
    LatticePoint start;
    int start_id;
    std::uint64_t visited = 0;
    std::vector<LatticePoint> path;

    // Legal continuations from the end of the path; closing is reported as `closes`.
    template <typename F>
    void for_moves(F&& f) const {
        const LatticePoint p = path.back();
        for (const auto& d : kMoves) {
            const LatticePoint q{p.i + d.i, p.j + d.j};
            const int id = torus_id(q, w, h);
            if (id == start_id) {
                if (q.i == start.i + w && q.j == start.j) f(q, true);
                continue;
            }
            if (id < start_id || (visited & (std::uint64_t{1} << id))) continue;
            f(q, false);
        }
    }
};

}  // namespace

double estimate_grid_curve_count(int width, int height, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    const int n = width * height;
    std::uniform_int_distribution<int> pick_start(0, n - 1);
    double total = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const int id = pick_start(rng);
        CycleSearch search{width, height, {id % width, id / width}, id, std::uint64_t{1} << id, {}};
        search.path.push_back(search.start);
        double weight = n;
        for (;;) {
            std::vector<std::pair<LatticePoint, bool>> options;
            search.for_moves([&](const LatticePoint& q, bool closes) { options.emplace_back(q, closes); });
            if (options.empty()) break;
            weight *= static_cast<double>(options.size());
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            const auto [q, closes] = options[pick(rng)];
            if (closes) {
                total += weight;
                break;
            }
            search.visited |= std::uint64_t{1} << torus_id(q, width, height);
            search.path.push_back(q);
        }
    }
    return total / static_cast<double>(samples);
}

std::vector<GridCurve> enumerate_grid_curves(int width, int height, const Caps& caps) {
    check_grid_size(width, height, caps);
    std::vector<GridCurve> out;
    std::function<void(CycleSearch&)> dfs = [&](CycleSearch& search) {
        search.for_moves([&](const LatticePoint& q, bool closes) {
            if (closes) {
                if (out.size() >= caps.max_count) {
                    std::ostringstream msg;
                    msg << "more than " << caps.max_count << " grid curves on " << width << "x" << height
                        << " (estimated total " << static_cast<long long>(estimate_grid_curve_count(width, height, 1, 20000))
                        << ")";
                    throw CapExceededError(msg.str());
                }
                out.emplace_back(width, height, search.path);
                return;
            }
            const std::uint64_t bit = std::uint64_t{1} << torus_id(q, width, height);
            search.visited |= bit;
            search.path.push_back(q);
            dfs(search);
            search.path.pop_back();
            search.visited &= ~bit;
        });
    };
    for (int id = 0; id < width * height; ++id) {
        CycleSearch search{width, height, {id % width, id / width}, id, std::uint64_t{1} << id, {}};
        search.path.push_back(search.start);
        dfs(search);
    }
    return out;
}

std::vector<GridCurve> enumerate_staircase_curves(int width, int height, int max_step, const Caps& caps) {
    if (width < 2 || height < 2) throw ValidationError("grid dimensions must be at least 2");
    if (width * height > 64) throw CapExceededError("grid has more than 64 vertices");
    const int step = std::min(max_step, height - 1);
    std::vector<GridCurve> out;
    std::vector<int> heights(static_cast<std::size_t>(width) + 1);
    std::function<void(int)> place = [&](int col) {
        if (col == width) {
            if (heights[width] != heights[0]) return;
            std::vector<LatticePoint> path;
            for (int c = 0; c < width; ++c) {
                const int from = heights[c];
                const int to = heights[c + 1];
                const int dir = (to > from) - (to < from);
                for (int j = from; j != to; j += dir) path.push_back({c, j});
                path.push_back({c, to});
            }
            if (out.size() >= caps.max_count) {
                throw CapExceededError("more than " + std::to_string(caps.max_count) + " staircase curves");
            }
            out.emplace_back(width, height, std::move(path));
            return;
        }
        // Remaining columns must be able to return to the starting height.
        for (int d = -step; d <= step; ++d) {
            const int next = heights[col] + d;
            if (std::abs(next - heights[0]) > step * (width - col - 1)) continue;
            heights[col + 1] = next;
            place(col + 1);
        }
    };
    for (int h0 = 0; h0 < height; ++h0) {
        heights[0] = h0;
        place(0);
    }
    return out;
}

std::vector<GridCurve> coarse_curves(int width, int height, const Caps& caps) {
    if (width % 2 != 0 || height % 2 != 0 || width < 4 || height < 4) {
        throw ValidationError("coarse curves need even grid dimensions of at least 4");
    }
    const int cw = width / 2;
    const int ch = height / 2;
    std::vector<GridCurve> out;
    for (const auto& c : enumerate_staircase_curves(cw, ch, ch - 1, caps)) {
        const auto& p = c.path();
        std::vector<LatticePoint> fine;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const LatticePoint next = k + 1 < p.size() ? p[k + 1] : LatticePoint{p[0].i + cw, p[0].j};
            fine.push_back({2 * p[k].i, 2 * p[k].j});
            fine.push_back({p[k].i + next.i, p[k].j + next.j});
        }
        out.emplace_back(width, height, std::move(fine));
    }
    return out;
}

std::vector<GridCurve> oracle_family(int width, int height, const Caps& caps) {
    auto family = enumerate_staircase_curves(width, height, 1, caps);
    if (width % 2 == 0 && height % 2 == 0 && width >= 4 && height >= 4) {
        const auto coarse = coarse_curves(width, height, caps);
        family.insert(family.end(), coarse.begin(), coarse.end());
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.size() > caps.max_oracle_vertices) {
        throw CapExceededError("oracle family of " + std::to_string(family.size()) + " curves exceeds the cap " +
                               std::to_string(caps.max_oracle_vertices));
    }
    return family;
}

}  // namespace fcl
