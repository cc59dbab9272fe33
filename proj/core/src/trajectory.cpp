// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/trajectory.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

namespace {

constexpr int point_dims(Point2) { return 2; }
constexpr int point_dims(Point3) { return 3; }

void set_coord(Point2& p, int i, double v) { (i == 0 ? p.x : p.y) = v; }
void set_coord(Point3& p, int i, double v) { (i == 0 ? p.x : i == 1 ? p.y : p.z) = v; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_double(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

template <typename PointT>
bool parse_line(std::string_view line, PointT& p) {
    constexpr int dims = point_dims(PointT{});
    int i = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string_view field =
            comma == std::string_view::npos ? line.substr(start) : line.substr(start, comma - start);
        if (i >= dims) return false;
        double v = 0;
        if (!parse_double(field, v)) return false;
        set_coord(p, i, v);
        ++i;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return i == dims;
}

}  // namespace

template <typename PointT>
BasicTrajectory<PointT> parse_trajectory(std::istream& in) {
    BasicTrajectory<PointT> t;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        PointT p;
        if (!parse_line(body, p)) {
            if (header_allowed && t.points.empty()) {
                header_allowed = false;  // a single leading header line is tolerated
                continue;
            }
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(point_dims(PointT{})) + " comma-separated values");
        }
        if (!is_finite(p)) {
            throw DataError("line " + std::to_string(line_no) + ": non-finite value");
        }
        t.points.push_back(p);
    }
    if (t.points.size() < 2) {
        throw DataError("insufficient points: need at least 2, got " +
                        std::to_string(t.points.size()));
    }
    return t;
}

namespace {

// 1 KiB holds three %.6f-formatted doubles of any magnitude.
void format_point(char* buf, std::size_t n, Point2 p) {
    std::snprintf(buf, n, "%.6f, %.6f\n", p.x, p.y);
}
void format_point(char* buf, std::size_t n, Point3 p) {
    std::snprintf(buf, n, "%.6f, %.6f, %.6f\n", p.x, p.y, p.z);
}

}  // namespace

template <typename PointT>
void write_trajectory(const BasicTrajectory<PointT>& t, std::ostream& out) {
    char buf[1024];
    for (const PointT& p : t.points) {
        format_point(buf, sizeof buf, p);
        out << buf;
    }
}

template <typename PointT>
BasicTrajectory<PointT> resample_by_arclength(const BasicTrajectory<PointT>& t, std::size_t m) {
    if (m < 2) throw DataError("resample target must be at least 2 points");
    if (t.points.size() < 2) throw DataError("trajectory must have at least 2 points");

    const std::size_t n = t.points.size();
    std::vector<double> cum(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        cum[i] = cum[i - 1] + distance(t.points[i - 1], t.points[i]);
    }
    const double total = cum.back();
    if (total <= 0.0) throw DataError("zero-length trajectory: all points coincide");

    BasicTrajectory<PointT> out;
    out.sample_rate_hz = t.sample_rate_hz;
    out.label = t.label;
    out.points.resize(m);
    out.points.front() = t.points.front();
    out.points.back() = t.points.back();

    std::size_t seg = 0;
    for (std::size_t j = 1; j + 1 < m; ++j) {
        const double s = total * static_cast<double>(j) / static_cast<double>(m - 1);
        while (seg + 2 < n && cum[seg + 1] <= s) ++seg;
        const double seg_len = cum[seg + 1] - cum[seg];
        const double u = seg_len > 0.0 ? (s - cum[seg]) / seg_len : 0.0;
        out.points[j] = lerp(t.points[seg], t.points[seg + 1], u);
    }
    return out;
}

BoundingBox bounding_box(const Trajectory2& t) {
    if (t.points.empty()) throw DataError("bounding box of empty trajectory");
    BoundingBox box{t.points.front(), t.points.front()};
    for (const Point2& p : t.points) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
    }
    return box;
}

namespace {

bool in_unit(double v) { return v >= -1.0 && v <= 1.0; }
bool in_unit(Point2 p) { return in_unit(p.x) && in_unit(p.y); }
bool in_unit(Point3 p) { return in_unit(p.x) && in_unit(p.y) && in_unit(p.z); }

}  // namespace

template <typename PointT>
bool check_unit_range(const BasicTrajectory<PointT>& t) {
    return std::all_of(t.points.begin(), t.points.end(), [](PointT p) { return in_unit(p); });
}

Trajectory2 normalize_to_unit(const Trajectory2& t) {
    const BoundingBox box = bounding_box(t);
    const Point2 center = box.center();
    const Point2 ext = box.extent();
    const double half = 0.5 * std::max(ext.x, ext.y);
    if (half <= 0.0) throw DataError("cannot normalize a single-point trajectory");

    Trajectory2 out;
    out.sample_rate_hz = t.sample_rate_hz;
    out.label = t.label;
    out.points.reserve(t.points.size());
    // Division plus clamp: rounding must not push a boundary coordinate
    // outside the closed unit interval.
    const auto map = [half](double v, double c) {
        return std::clamp((v - c) / half, -1.0, 1.0);
    };
    for (const Point2& p : t.points) {
        out.points.push_back({map(p.x, center.x), map(p.y, center.y)});
    }
    return out;
}

template BasicTrajectory<Point2> parse_trajectory<Point2>(std::istream&);
template BasicTrajectory<Point3> parse_trajectory<Point3>(std::istream&);
template void write_trajectory<Point2>(const Trajectory2&, std::ostream&);
template void write_trajectory<Point3>(const Trajectory3&, std::ostream&);
template Trajectory2 resample_by_arclength<Point2>(const Trajectory2&, std::size_t);
template Trajectory3 resample_by_arclength<Point3>(const Trajectory3&, std::size_t);
template bool check_unit_range<Point2>(const Trajectory2&);
template bool check_unit_range<Point3>(const Trajectory3&);

}  // namespace glyphtrace
