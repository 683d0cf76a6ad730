#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "springfold/crease_pattern.hpp"

namespace springfold {

struct SvgStyle {
    double stroke_width = 0.02;         // model units
    double border_stroke_width = 0.05;
    std::string valley_dash = "0.2,0.12";
    std::string flat_dash = "0.05,0.1";
};

namespace svg_detail {
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}
}  // namespace svg_detail

// Mountains solid, valleys dashed, border heavy solid, flat creases dotted.
// 1 model unit = 1 SVG user unit; creases emitted in index order so identical
// patterns render to identical bytes.
inline std::string write_svg(const CreasePattern& cp, const SvgStyle& style = {}) {
    using svg_detail::num;
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    if (!cp.vertices.empty()) {
        min_x = max_x = cp.vertices[0].x;
        min_y = max_y = cp.vertices[0].y;
        for (const auto& v : cp.vertices) {
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
            min_y = std::min(min_y, v.y);
            max_y = std::max(max_y, v.y);
        }
    }
    const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y) + style.border_stroke_width;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(min_x - margin) + " " +
           num(min_y - margin) + " " + num(max_x - min_x + 2 * margin) + " " +
           num(max_y - min_y + 2 * margin) + "\">\n";
    // Flip y so the pattern renders with y up.
    out += "<g transform=\"translate(0," + num(min_y + max_y) + ") scale(1,-1)\" fill=\"none\">\n";
    for (const auto& c : cp.creases) {
        const Vec2& a = cp.vertices[c.v1];
        const Vec2& b = cp.vertices[c.v2];
        std::string attrs;
        switch (c.assignment) {
            case CreaseAssignment::Mountain:
                attrs = "stroke=\"#b22\" stroke-width=\"" + num(style.stroke_width) + "\"";
                break;
            case CreaseAssignment::Valley:
                attrs = "stroke=\"#22b\" stroke-width=\"" + num(style.stroke_width) +
                        "\" stroke-dasharray=\"" + style.valley_dash + "\"";
                break;
            case CreaseAssignment::Border:
                attrs = "stroke=\"#000\" stroke-width=\"" + num(style.border_stroke_width) + "\"";
                break;
            case CreaseAssignment::Flat:
                attrs = "stroke=\"#999\" stroke-width=\"" + num(0.5 * style.stroke_width) +
                        "\" stroke-dasharray=\"" + style.flat_dash + "\"";
                break;
        }
        out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
               "\" y2=\"" + num(b.y) + "\" " + attrs + "/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace springfold
