#include "fcl/curve.hpp"

#include "fcl/errors.hpp"

namespace fcl {

PLCurve::PLCurve(std::vector<RationalPoint> vertices, std::vector<IntOffset> offsets)
    : vertices_(std::move(vertices)), offsets_(std::move(offsets)) {}

PLCurve PLCurve::from_lift(const std::vector<Vec2>& points, IntOffset winding) {
    const std::size_t n = points.size();
    std::vector<RationalPoint> vertices;
    std::vector<IntOffset> offsets;
    vertices.reserve(n);
    offsets.reserve(n);
    const Vec2 close = points.empty() ? Vec2{} : points.front() + to_vec(winding);
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2& p = points[k];
        const Vec2& q = k + 1 < n ? points[k + 1] : close;
        vertices.push_back(RationalPoint::wrap(p.x, p.y));
        offsets.push_back({floor_to_int(q.x) - floor_to_int(p.x), floor_to_int(q.y) - floor_to_int(p.y)});
    }
    return {std::move(vertices), std::move(offsets)};
}

IntOffset PLCurve::winding() const {
    IntOffset w;
    for (const auto& o : offsets_) {
        w.dx += o.dx;
        w.dy += o.dy;
    }
    return w;
}

std::vector<Vec2> PLCurve::lift_points() const {
    if (vertices_.size() != offsets_.size()) {
        throw ValidationError("curve has " + std::to_string(vertices_.size()) + " vertices but " +
                              std::to_string(offsets_.size()) + " offsets");
    }
    const std::size_t n = vertices_.size();
    std::vector<Vec2> q;
    q.reserve(n + 1);
    IntOffset acc;
    for (std::size_t k = 0; k <= n; ++k) {
        const Vec2 v = vertices_[k % n].vec();
        q.push_back(v + to_vec(acc));
        if (k < n) {
            acc.dx += offsets_[k].dx;
            acc.dy += offsets_[k].dy;
        }
    }
    return q;
}

std::vector<Segment> PLCurve::lift_segments() const {
    const auto q = lift_points();
    std::vector<Segment> segs;
    segs.reserve(size());
    for (std::size_t k = 0; k + 1 < q.size(); ++k) segs.push_back({q[k], q[k + 1]});
    return segs;
}

std::pair<Rational, Rational> PLCurve::y_extent() const {
    const auto q = lift_points();
    Rational lo = q.front().y, hi = q.front().y;
    for (const auto& p : q) {
        if (p.y < lo) lo = p.y;
        if (p.y > hi) hi = p.y;
    }
    return {lo, hi};
}

PLCurve PLCurve::translated(const Vec2& t) const {
    auto q = lift_points();
    q.pop_back();
    for (auto& p : q) p = p + t;
    return from_lift(q, winding());
}

std::string to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::empty: return "empty";
        case IssueKind::closure: return "closure";
        case IssueKind::zero_length_segment: return "zero_length_segment";
        case IssueKind::self_intersection: return "self_intersection";
        case IssueKind::wrong_class: return "wrong_class";
    }
    return "unknown";
}

bool ValidationReport::has(IssueKind kind) const {
    for (const auto& issue : issues) {
        if (issue.kind == kind) return true;
    }
    return false;
}

namespace {

// The point that segments i and j + t legitimately share, if any.
std::optional<Vec2> allowed_touch(std::size_t i, std::size_t j, std::int64_t tx, std::int64_t ty,
                                  const std::vector<Vec2>& q, const IntOffset& w) {
    const std::size_t n = q.size() - 1;
    const bool zero = tx == 0 && ty == 0;
    const bool minus_w = tx == -w.dx && ty == -w.dy;
    const bool plus_w = tx == w.dx && ty == w.dy;
    if (n == 1) {
        if (plus_w) return q[1];
        if (minus_w) return q[0];
        return std::nullopt;
    }
    if (j == i + 1 && zero) return q[j];
    if (i == 0 && j == n - 1 && minus_w) return q[0];
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const std::vector<Vec2>& q,
                                                                          const IntOffset& w) {
    const std::size_t n = q.size() - 1;
    std::vector<Segment> segs;
    std::vector<Box> boxes;
    for (std::size_t k = 0; k < n; ++k) {
        segs.push_back({q[k], q[k + 1]});
        boxes.push_back(bounding_box(segs.back()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const auto r = overlapping_translations(boxes[i], boxes[j]);
            for (std::int64_t a = r.ax_lo; a <= r.ax_hi; ++a) {
                for (std::int64_t b = r.by_lo; b <= r.by_hi; ++b) {
                    if (i == j && a == 0 && b == 0) continue;
                    const Contact c = classify_contact(segs[i], shifted(segs[j], {Rational(a), Rational(b)}));
                    if (c.kind == ContactKind::none) continue;
                    const auto expected = allowed_touch(i, j, a, b, q, w);
                    if (expected && c.kind == ContactKind::touch && *c.point == *expected) continue;
                    return std::make_pair(i, j);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ValidationReport validate_curve(const PLCurve& curve) {
    ValidationReport report;
    if (curve.size() == 0) {
        report.issues.push_back({IssueKind::empty, "curve has no vertices", std::nullopt});
        return report;
    }
    if (curve.offsets().size() != curve.size()) {
        report.issues.push_back({IssueKind::closure,
                                 "curve does not close: " + std::to_string(curve.size()) + " vertices but " +
                                     std::to_string(curve.offsets().size()) + " segment offsets",
                                 std::nullopt});
        return report;
    }
    const auto q = curve.lift_points();
    const IntOffset w = curve.winding();
    bool zero_length = false;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        if (q[k] == q[k + 1]) {
            zero_length = true;
            report.issues.push_back(
                {IssueKind::zero_length_segment, "segment " + std::to_string(k) + " has zero length",
                 std::make_pair(k, k)});
        }
    }
    if (!zero_length) {
        if (auto hit = find_self_intersection(q, w)) {
            report.issues.push_back({IssueKind::self_intersection,
                                     "segments " + std::to_string(hit->first) + " and " +
                                         std::to_string(hit->second) + " intersect",
                                     hit});
        }
    }
    if (w.dx != 1 || w.dy != 0) {
        report.issues.push_back({IssueKind::wrong_class,
                                 "winding (" + std::to_string(w.dx) + "," + std::to_string(w.dy) +
                                     ") is not the class (1,0)",
                                 std::nullopt});
    }
    return report;
}

void require_valid(const PLCurve& curve, const std::string& name) {
    const auto report = validate_curve(curve);
    if (!report.ok()) throw ValidationError(name + ": " + report.issues.front().message);
}

namespace {

struct Canonical {
    std::vector<Vec2> points;  // one period of the lift, collinear interior vertices removed
    Vec2 period;
};

Canonical canonical_form(const PLCurve& c) {
    auto q = c.lift_points();
    q.pop_back();
    const Vec2 w = to_vec(c.winding());
    bool changed = true;
    while (changed && q.size() > 1) {
        changed = false;
        const std::size_t m = q.size();
        for (std::size_t k = 0; k < m; ++k) {
            const Vec2 prev = k == 0 ? q[m - 1] - w : q[k - 1];
            const Vec2 next = k + 1 == m ? q[0] + w : q[k + 1];
            const Vec2 d1 = q[k] - prev;
            const Vec2 d2 = next - q[k];
            if (cross(d1, d2) == 0 && dot(d1, d2) > 0) {
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
        }
    }
    return {q, w};
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

bool same_curve(const PLCurve& a, const PLCurve& b) {
    const Canonical ca = canonical_form(a);
    const Canonical cb = canonical_form(b);
    if (!(ca.period == cb.period) || ca.points.size() != cb.points.size()) return false;
    const std::size_t m = ca.points.size();
    if (m == 0) return true;
    if (m == 1) {
        // A straight closed curve: any point of it may serve as the vertex.
        return is_integer(cross(cb.points[0] - ca.points[0], ca.period));
    }
    for (std::size_t r = 0; r < m; ++r) {
        // Rotate b so that its vertex r lines up with vertex 0 of a, modulo Z^2.
        const Vec2 shift = ca.points[0] - cb.points[r];
        if (!is_integer(shift.x) || !is_integer(shift.y)) continue;
        bool match = true;
        for (std::size_t k = 0; k < m && match; ++k) {
            const std::size_t idx = (r + k) % m;
            Vec2 p = cb.points[idx];
            if (r + k >= m) p = p + cb.period;
            match = (p + shift) == ca.points[k];
        }
        if (match) return true;
    }
    return false;
}

}  // namespace fcl
