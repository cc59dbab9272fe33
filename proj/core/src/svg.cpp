// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/svg.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string coord(Point2 p, double flip_sum) {
    return num(p.x) + "," + num(flip_sum - p.y);
}

}  // namespace

void export_svg(const std::vector<VectorPath>& paths, const BoundingBox& canvas,
                std::ostream& out) {
    if (paths.empty()) throw DataError("nothing to export");

    const double flip_sum = canvas.min.y + canvas.max.y;
    const Point2 ext = canvas.extent();

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << num(canvas.min.x) << " " << num(canvas.min.y) << " " << num(ext.x) << " " << num(ext.y)
        << "\">\n";

    for (const VectorPath& path : paths) {
        std::string d;
        for (const Subpath& sub : path.subpaths) {
            if (sub.segments.empty()) continue;
            if (!d.empty()) d += " ";
            d += "M " + coord(sub.segments.front().p0, flip_sum);
            for (const CubicBezier& seg : sub.segments) {
                d += " C " + coord(seg.p1, flip_sum) + " " + coord(seg.p2, flip_sum) + " " +
                     coord(seg.p3, flip_sum);
            }
            if (sub.closed) d += " Z";
        }
        if (d.empty()) continue;
        if (path.style.dotted) {
            out << "  <path d=\"" << d << "\" fill=\"black\" stroke=\"none\"/>\n";
        } else {
            out << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
                << num(path.style.stroke_width) << "\"/>\n";
        }
    }
    out << "</svg>\n";
    if (!out.good()) throw DataError("failed to write SVG");
}

}  // namespace glyphtrace
