// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/simplify.hpp"

#include <vector>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = squared_norm(ab);
    if (len2 <= 0.0) return distance(p, a);
    double u = dot(p - a, ab) / len2;
    u = u < 0.0 ? 0.0 : u > 1.0 ? 1.0 : u;
    return distance(p, lerp(a, b, u));
}

namespace {

void rdp_mark(const std::vector<Point2>& pts, std::size_t first, std::size_t last, double epsilon,
              std::vector<char>& keep) {
    if (last <= first + 1) return;
    double max_d = -1.0;
    std::size_t split = first;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double d = point_segment_distance(pts[i], pts[first], pts[last]);
        if (d > max_d) {
            max_d = d;
            split = i;
        }
    }
    if (max_d > epsilon) {
        keep[split] = 1;
        rdp_mark(pts, first, split, epsilon, keep);
        rdp_mark(pts, split, last, epsilon, keep);
    }
}

}  // namespace

Trajectory2 simplify_rdp(const Trajectory2& t, double epsilon) {
    if (epsilon < 0.0) throw DataError("epsilon must be non-negative");
    if (t.points.size() < 2) throw DataError("simplification needs at least 2 points");

    std::vector<char> keep(t.points.size(), 0);
    keep.front() = 1;
    keep.back() = 1;
    rdp_mark(t.points, 0, t.points.size() - 1, epsilon, keep);

    Trajectory2 out;
    out.sample_rate_hz = t.sample_rate_hz;
    out.label = t.label;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (keep[i]) out.points.push_back(t.points[i]);
    }
    return out;
}

}  // namespace glyphtrace
