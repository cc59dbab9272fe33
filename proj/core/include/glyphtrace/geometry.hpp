// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Planar and spatial point types shared across the pipeline.

#pragma once

#include <cmath>

namespace glyphtrace {

struct Point2 {
    double x{0};
    double y{0};

    friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
    double x{0};
    double y{0};
    double z{0};

    friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

[[nodiscard]] constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
[[nodiscard]] constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
[[nodiscard]] constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
[[nodiscard]] constexpr Point2 operator*(Point2 p, double s) { return s * p; }

[[nodiscard]] constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
[[nodiscard]] constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
[[nodiscard]] constexpr Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
[[nodiscard]] constexpr Point3 operator*(Point3 p, double s) { return s * p; }

[[nodiscard]] constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

[[nodiscard]] constexpr double squared_norm(Point2 p) { return dot(p, p); }
[[nodiscard]] constexpr double squared_norm(Point3 p) { return dot(p, p); }

[[nodiscard]] inline double norm(Point2 p) { return std::sqrt(squared_norm(p)); }
[[nodiscard]] inline double norm(Point3 p) { return std::sqrt(squared_norm(p)); }

[[nodiscard]] inline double distance(Point2 a, Point2 b) { return norm(b - a); }
[[nodiscard]] inline double distance(Point3 a, Point3 b) { return norm(b - a); }

// Linear interpolation; exact at t == 0, within one ulp at t == 1.
[[nodiscard]] constexpr Point2 lerp(Point2 a, Point2 b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}
[[nodiscard]] constexpr Point3 lerp(Point3 a, Point3 b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

[[nodiscard]] inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
[[nodiscard]] inline bool is_finite(Point3 p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Axis-aligned box over 2D points. min/max ordering is an invariant of the
// constructing operation, not enforced here.
struct BoundingBox {
    Point2 min;
    Point2 max;

    [[nodiscard]] Point2 center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }
    [[nodiscard]] Point2 extent() const { return {max.x - min.x, max.y - min.y}; }
    [[nodiscard]] double diagonal() const { return distance(min, max); }

    friend constexpr bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

}  // namespace glyphtrace
