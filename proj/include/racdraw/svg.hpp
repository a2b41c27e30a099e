#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "racdraw/validator.hpp"

namespace racdraw {

struct SvgOptions {
    double scale = 4.0;
    double margin = 20.0;
    bool color_classes = false;
    bool label_vertices = true;
    std::vector<RationalPoint> crossings; // drawn as markers when non-empty
};

inline std::vector<RationalPoint> crossing_points(const CrossingReport& r) {
    std::vector<RationalPoint> out;
    out.reserve(r.crossings.size());
    for (const auto& c : r.crossings) out.push_back(c.at);
    return out;
}

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace detail

/// SVG 1.1. Screen y grows downwards, so level 1 ends up on top.
inline std::string render_svg(const Drawing& d, const SvgOptions& opt = {}) {
    const BoundingBox box = bounding_box(d);
    const double w = static_cast<double>(box.width()) * opt.scale + 2 * opt.margin;
    const double h = static_cast<double>(box.height()) * opt.scale + 2 * opt.margin;
    auto sx = [&](double x) { return detail::num((x - static_cast<double>(box.xmin)) * opt.scale + opt.margin); };
    auto sy = [&](double y) { return detail::num((static_cast<double>(box.ymax) - y) * opt.scale + opt.margin); };

    static constexpr const char* kClassColors[] = {"#7f7f7f", "#1f77b4", "#d62728", "#2ca02c",
                                                   "#9467bd", "#ff7f0e", "#8c564b"};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::num(w) << "\" height=\""
        << detail::num(h) << "\" viewBox=\"0 0 " << detail::num(w) << " " << detail::num(h) << "\">\n"
        << "<style>\n"
        << "polyline.edge { fill: none; stroke: #333333; stroke-width: 0.5; }\n"
        << "line { stroke-width: 0.5; }\n";
    for (int r = 1; r <= 7; ++r) out << "line.s" << r << " { stroke: " << kClassColors[r - 1] << "; }\n";
    out << "circle.vertex { fill: #000000; }\n"
        << "circle.crossing { fill: none; stroke: #e377c2; stroke-width: 0.4; }\n"
        << "text { font-family: sans-serif; font-size: 8px; }\n"
        << "</style>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << detail::num(w) << "\" height=\"" << detail::num(h)
        << "\" fill=\"#ffffff\"/>\n";

    out << "<g id=\"edges\">\n";
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const auto& edge = d.edges[e];
        if (opt.color_classes) {
            out << "<g class=\"edge\" id=\"e" << e << "\">\n";
            for (const Segment& s : edge.segments())
                out << "<line class=\"s" << index_of(s.cls) << "\" x1=\"" << sx(s.from.x) << "\" y1=\"" << sy(s.from.y)
                    << "\" x2=\"" << sx(s.to.x) << "\" y2=\"" << sy(s.to.y) << "\"/>\n";
            out << "</g>\n";
        } else {
            out << "<polyline class=\"edge\" id=\"e" << e << "\" points=\"";
            const auto pts = edge.chain();
            for (std::size_t t = 0; t < pts.size(); ++t)
                out << (t ? " " : "") << sx(pts[t].x) << "," << sy(pts[t].y);
            out << "\"/>\n";
        }
    }
    out << "</g>\n";

    if (!opt.crossings.empty()) {
        out << "<g id=\"crossings\">\n";
        for (const auto& c : opt.crossings)
            out << "<circle class=\"crossing\" cx=\"" << sx(c.x.to_double()) << "\" cy=\"" << sy(c.y.to_double())
                << "\" r=\"1.5\"/>\n";
        out << "</g>\n";
    }

    out << "<g id=\"vertices\">\n";
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto& vp = d.vertices[v];
        const double px = static_cast<double>(vp.point.x), py = static_cast<double>(vp.point.y);
        out << "<circle class=\"vertex\" cx=\"" << sx(px) << "\" cy=\"" << sy(py) << "\" r=\"2\"/>\n";
        if (opt.label_vertices)
            out << "<text x=\"" << sx(px) << "\" y=\"" << detail::num((static_cast<double>(box.ymax) - py) * opt.scale + opt.margin + 10)
                << "\">V" << vp.pos.level << "," << vp.pos.pos << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace racdraw
