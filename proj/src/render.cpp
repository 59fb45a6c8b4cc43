#include "fcl/render.hpp"

#include "fcl/cover.hpp"
#include "fcl/errors.hpp"

#include <cstdio>
#include <sstream>

namespace fcl {

namespace {

constexpr double kStripWidth = 300.0;
constexpr double kUnit = 120.0;  // pixels per unit of height
constexpr double kMargin = 60.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* colour(std::int64_t level) {
    const auto n = static_cast<std::int64_t>(kLevelPalette.size());
    return kLevelPalette[static_cast<std::size_t>(((level % n) + n) % n)];
}

}  // namespace

std::string render_cover(const std::vector<PLCurve>& curves, int window) {
    if (window < 1) throw SizingError("render window must be at least 1");
    const double height = 2.0 * window * kUnit;
    const double total_w = kStripWidth + 2 * kMargin + 80;
    const double total_h = height + 2 * kMargin;
    auto px = [&](const Rational& x) { return kMargin + to_double(x) * kStripWidth; };
    auto py = [&](const Rational& y) { return kMargin + (window - to_double(y)) * kUnit; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_w) << "\" height=\"" << num(total_h)
        << "\" viewBox=\"0 0 " << num(total_w) << " " << num(total_h) << "\">\n";
    svg << "<defs><clipPath id=\"strip\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kStripWidth) << "\" height=\"" << num(height) << "\"/></clipPath></defs>\n";
    svg << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kStripWidth)
        << "\" height=\"" << num(height) << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (int k = -window; k <= window; ++k) {
        const double y = py(Rational(k));
        svg << "<line x1=\"" << num(kMargin - 6) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kMargin) << "\" y2=\""
            << num(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num(kMargin - 10) << "\" y=\"" << num(y + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">y=" << k << "</text>\n";
    }

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto lift = lift_to_cylinder(curves[i], {Rational(-window), Rational(window)});
        for (const auto& e : lift.components) {
            const bool base = e.level == 0;
            svg << "<g class=\"elevation\" data-curve=\"" << i << "\" data-level=\"" << e.level << "\" stroke=\""
                << colour(e.level) << "\" stroke-width=\"" << (base ? "3" : "1.2") << "\""
                << (base ? "" : " stroke-dasharray=\"5,3\"") << " clip-path=\"url(#strip)\">\n";
            for (const auto& s : e.segments) {
                svg << "<line x1=\"" << num(px(s.a.x)) << "\" y1=\"" << num(py(s.a.y)) << "\" x2=\"" << num(px(s.b.x))
                    << "\" y2=\"" << num(py(s.b.y)) << "\"/>\n";
            }
            svg << "</g>\n";
            const Rational mid = (e.y_min + e.y_max) / 2;
            if (mid >= -window && mid <= window) {
                svg << "<text x=\"" << num(kMargin + kStripWidth + 8 + 40.0 * static_cast<double>(i % 2)) << "\" y=\""
                    << num(py(mid) + 4) << "\" font-size=\"11\" fill=\"" << colour(e.level) << "\">c" << i
                    << " L" << e.level << "</text>\n";
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace fcl
