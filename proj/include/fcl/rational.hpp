#ifndef FCL_RATIONAL_HPP
#define FCL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fcl {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ValidationError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
Rational make_rational(long num, long den);

/// Always "p/q" with q >= 1 and gcd(p, q) = 1 (so 0 is "0/1").
std::string format_rational(const Rational& r);

std::int64_t floor_to_int(const Rational& r);
std::int64_t ceil_to_int(const Rational& r);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

double to_double(const Rational& r);

/// Exact 2D vector / point in the plane or in the cylinder.
struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Lexicographic (x, then y).
bool lex_less(const Vec2& a, const Vec2& b);

/// A point of the unit-square torus. Coordinates are kept canonical and in [0, 1).
class RationalPoint {
public:
    RationalPoint() = default;
    /// Throws ValidationError unless 0 <= x, y < 1.
    RationalPoint(Rational x, Rational y);

    /// Reduces arbitrary plane coordinates mod 1.
    static RationalPoint wrap(const Rational& x, const Rational& y);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    Vec2 vec() const { return {x_, y_}; }

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    Rational x_{0};
    Rational y_{0};
};

}  // namespace fcl

#endif  // FCL_RATIONAL_HPP
