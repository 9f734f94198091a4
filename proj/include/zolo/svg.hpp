#pragma once

#include <cstdio>
#include <string>

#include "pullback.hpp"

namespace zolo {

struct SvgStyle {
    double scale = 120.0;     // plane units to pixels
    double margin = 24.0;
    double vertex_radius = 4.0;
    double stroke_width = 1.2;
};

namespace svgdetail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // +0.0 kills negative zero
    return buf;
}

}  // namespace svgdetail

/// Deterministic SVG 1.1 picture of a lifted graph: white vertices hollow,
/// black filled, grey squares; edges drawn from the sampled lift curves.
inline std::string render_svg(const EmbeddedGraph& g, SvgStyle style = {}) {
    using svgdetail::num;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto see = [&](cd z) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
    };
    for (const auto& v : g.vertices) see(v.location);
    for (const auto& e : g.edges)
        for (cd z : e.curve) see(z);
    if (xmin > xmax) { xmin = ymin = -1; xmax = ymax = 1; }

    const double W = (xmax - xmin) * style.scale + 2 * style.margin;
    const double H = (ymax - ymin) * style.scale + 2 * style.margin;
    auto px = [&](cd z) {
        // plane y axis points up; svg y axis points down
        double x = (z.real() - xmin) * style.scale + style.margin;
        double y = (ymax - z.imag()) * style.scale + style.margin;
        return std::pair<double, double>{x, y};
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(W) +
           "\" height=\"" + num(H) + "\" viewBox=\"0 0 " + num(W) + " " + num(H) + "\">\n";
    for (const auto& e : g.edges) {
        out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
               num(style.stroke_width) + "\" points=\"";
        // thin dense sample lists: keep at most ~64 points per edge
        size_t stride = std::max<size_t>(1, e.curve.size() / 64);
        for (size_t i = 0; i < e.curve.size(); i += stride) {
            auto [x, y] = px(e.curve[i]);
            out += num(x) + "," + num(y) + " ";
        }
        auto [xe, ye] = px(e.curve.back());
        out += num(xe) + "," + num(ye);
        out += "\"/>\n";
    }
    for (const auto& v : g.vertices) {
        auto [x, y] = px(v.location);
        double r = style.vertex_radius;
        if (v.color == Color::Grey) {
            out += "  <rect x=\"" + num(x - r) + "\" y=\"" + num(y - r) + "\" width=\"" +
                   num(2 * r) + "\" height=\"" + num(2 * r) +
                   "\" fill=\"grey\" stroke=\"black\"/>\n";
        } else {
            out += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) +
                   "\" fill=\"" + (v.color == Color::White ? "white" : "black") +
                   "\" stroke=\"black\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace zolo
