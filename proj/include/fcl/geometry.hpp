#ifndef FCL_GEOMETRY_HPP
#define FCL_GEOMETRY_HPP

#include "fcl/rational.hpp"

#include <cstdint>
#include <optional>

namespace fcl {

struct Segment {
    Vec2 a;
    Vec2 b;
};

inline Segment shifted(const Segment& s, const Vec2& t) { return {s.a + t, s.b + t}; }

struct Box {
    Rational xmin, xmax, ymin, ymax;
};

Box bounding_box(const Segment& s);

// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(const Vec2& a, const Vec2& b, const Vec2& c);

// c lies on the closed segment [a, b].
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c);

enum class ContactKind {
    none,
    proper,   // single point interior to both segments, not collinear
    touch,    // single point, but an endpoint of one lies on the other
    overlap,  // collinear with a shared piece of positive length
};

struct Contact {
    ContactKind kind = ContactKind::none;
    std::optional<Vec2> point;  // set for proper and touch
};

Contact classify_contact(const Segment& s, const Segment& t);

// Integer translations (a, b) for which bbox(s) meets bbox(t) + (a, b).
struct TranslationRange {
    std::int64_t ax_lo, ax_hi, by_lo, by_hi;
};

TranslationRange overlapping_translations(const Box& s, const Box& t);

}  // namespace fcl

#endif  // FCL_GEOMETRY_HPP
