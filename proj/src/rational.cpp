#include "fcl/rational.hpp"

#include "fcl/errors.hpp"

#include <cctype>

namespace fcl {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class q{std::string(den)};
    if (q == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw ValidationError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::int64_t floor_to_int(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

std::int64_t ceil_to_int(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

Rational frac(const Rational& r) { return r - Rational(floor_to_int(r)); }

double to_double(const Rational& r) { return r.get_d(); }

bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

RationalPoint::RationalPoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
    if (x_ < 0 || x_ >= 1 || y_ < 0 || y_ >= 1) {
        throw ValidationError("torus coordinates must lie in [0,1): (" + format_rational(x_) + ", " +
                              format_rational(y_) + ")");
    }
}

RationalPoint RationalPoint::wrap(const Rational& x, const Rational& y) { return {frac(x), frac(y)}; }

}  // namespace fcl
