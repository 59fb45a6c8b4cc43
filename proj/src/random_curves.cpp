#include "fcl/random_curves.hpp"

#include "fcl/errors.hpp"

#include <algorithm>
#include <set>

namespace fcl {

namespace {

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long den) {
    std::uniform_int_distribution<long> d(lo_num, hi_num);
    return make_rational(d(rng), den);
}

}  // namespace

PLCurve random_graph_curve(std::mt19937_64& rng, int max_vertices) {
    constexpr long kXDen = 97;
    constexpr long kYDen = 89;
    std::uniform_int_distribution<int> count(1, max_vertices);
    const int k = count(rng);
    std::set<long> xs;
    std::uniform_int_distribution<long> xd(0, kXDen - 1);
    while (static_cast<int>(xs.size()) < k) xs.insert(xd(rng));
    std::vector<Vec2> pts;
    for (long x : xs) pts.push_back({make_rational(x, kXDen), random_rational(rng, -2 * kYDen, 2 * kYDen, kYDen)});
    return PLCurve::from_lift(pts, {1, 0});
}

PLCurve random_general_curve(std::mt19937_64& rng, int max_vertices) {
    constexpr long kXDen = 83;
    constexpr long kYDen = 79;
    std::uniform_int_distribution<int> count(3, std::max(3, max_vertices));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const int m = count(rng);
        std::vector<Vec2> pts;
        pts.push_back({random_rational(rng, 0, kXDen - 1, kXDen), random_rational(rng, -kYDen, kYDen, kYDen)});
        for (int i = 1; i < m; ++i) {
            // Drift rightwards on average, with room to double back.
            const Rational step = random_rational(rng, -kXDen / 3, kXDen * 2 / 3, kXDen) / (m / 2 + 1);
            pts.push_back({pts.back().x + step, random_rational(rng, -2 * kYDen, 2 * kYDen, kYDen)});
        }
        const PLCurve c = PLCurve::from_lift(pts, {1, 0});
        if (validate_curve(c).ok()) return c;
    }
    throw Error("could not sample a simple curve");
}

}  // namespace fcl
