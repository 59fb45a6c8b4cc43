#ifndef FCL_CURVE_HPP
#define FCL_CURVE_HPP

#include "fcl/geometry.hpp"
#include "fcl/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fcl {

struct IntOffset {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend bool operator==(const IntOffset&, const IntOffset&) = default;
};

inline Vec2 to_vec(const IntOffset& o) { return {Rational(o.dx), Rational(o.dy)}; }

// Closed polygon on the unit-square torus. Segment i runs from vertex i to
// vertex i+1 (cyclically) shifted by offsets[i], so the lift through vertex 0
// closes up after a translation by the winding.
class PLCurve {
public:
    PLCurve() = default;
    PLCurve(std::vector<RationalPoint> vertices, std::vector<IntOffset> offsets);

    // Builds a curve from plane points q_0..q_{m-1} of one lift; q_m = q_0 + winding.
    static PLCurve from_lift(const std::vector<Vec2>& points, IntOffset winding);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const std::vector<IntOffset>& offsets() const { return offsets_; }
    std::size_t size() const { return vertices_.size(); }

    IntOffset winding() const;

    // q_0..q_n with q_0 = vertex 0 and q_n = q_0 + winding. Requires matching sizes.
    std::vector<Vec2> lift_points() const;
    std::vector<Segment> lift_segments() const;

    // Min and max y over the level-0 lift.
    std::pair<Rational, Rational> y_extent() const;

    PLCurve translated(const Vec2& t) const;

private:
    std::vector<RationalPoint> vertices_;
    std::vector<IntOffset> offsets_;
};

enum class IssueKind {
    empty,
    closure,
    zero_length_segment,
    self_intersection,
    wrong_class,
};

std::string to_string(IssueKind kind);

struct ValidationIssue {
    IssueKind kind;
    std::string message;
    std::optional<std::pair<std::size_t, std::size_t>> segments;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    bool has(IssueKind kind) const;
};

ValidationReport validate_curve(const PLCurve& curve);

// Throws ValidationError with the first issue unless the curve is a valid (1,0) curve.
void require_valid(const PLCurve& curve, const std::string& name = "curve");

// Same point set, compared after merging collinear vertices and up to the
// choice of starting vertex.
bool same_curve(const PLCurve& a, const PLCurve& b);

}  // namespace fcl

#endif  // FCL_CURVE_HPP
