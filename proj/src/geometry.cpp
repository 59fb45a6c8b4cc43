#include "fcl/geometry.hpp"

#include <algorithm>

namespace fcl {

Box bounding_box(const Segment& s) {
    return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)};
}

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    return sgn(cross(b - a, c - a));
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
    if (orientation(a, b, c) != 0) return false;
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

namespace {

Contact collinear_contact(const Segment& s, const Segment& t) {
    // Project on the dominant axis of s (t is collinear with s here).
    const bool use_x = s.a.x != s.b.x || t.a.x != t.b.x;
    auto key = [&](const Vec2& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational s_lo = std::min(key(s.a), key(s.b));
    const Rational s_hi = std::max(key(s.a), key(s.b));
    const Rational t_lo = std::min(key(t.a), key(t.b));
    const Rational t_hi = std::max(key(t.a), key(t.b));
    const Rational lo = std::max(s_lo, t_lo);
    const Rational hi = std::min(s_hi, t_hi);
    if (lo > hi) return {};
    if (lo < hi) return {ContactKind::overlap, std::nullopt};
    for (const Vec2* p : {&s.a, &s.b}) {
        if (key(*p) == lo) return {ContactKind::touch, *p};
    }
    return {ContactKind::touch, key(t.a) == lo ? t.a : t.b};
}

}  // namespace

Contact classify_contact(const Segment& s, const Segment& t) {
    const int d1 = orientation(s.a, s.b, t.a);
    const int d2 = orientation(s.a, s.b, t.b);
    const int d3 = orientation(t.a, t.b, s.a);
    const int d4 = orientation(t.a, t.b, s.b);

    if (d1 == 0 && d2 == 0) {
        if (s.a == s.b && t.a == t.b) {
            return s.a == t.a ? Contact{ContactKind::touch, s.a} : Contact{};
        }
        return collinear_contact(s, t);
    }
    if (d1 * d2 > 0 || d3 * d4 > 0) return {};
    if (d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
        const Vec2 r = s.b - s.a;
        const Vec2 q = t.b - t.a;
        const Rational u = cross(t.a - s.a, q) / cross(r, q);
        return {ContactKind::proper, Vec2{s.a.x + u * r.x, s.a.y + u * r.y}};
    }
    if (d1 == 0) return {ContactKind::touch, t.a};
    if (d2 == 0) return {ContactKind::touch, t.b};
    if (d3 == 0) return {ContactKind::touch, s.a};
    return {ContactKind::touch, s.b};
}

TranslationRange overlapping_translations(const Box& s, const Box& t) {
    return {ceil_to_int(s.xmin - t.xmax), floor_to_int(s.xmax - t.xmin), ceil_to_int(s.ymin - t.ymax),
            floor_to_int(s.ymax - t.ymin)};
}

}  // namespace fcl
