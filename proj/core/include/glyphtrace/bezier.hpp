// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Vector paths: piecewise cubic Bezier fitting of polylines (least-squares
// with recursive subdivision) and dotted rendering of point sequences.

#pragma once

#include <cstddef>
#include <vector>

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

struct CubicBezier {
    Point2 p0, p1, p2, p3;

    [[nodiscard]] Point2 evaluate(double u) const;
};

struct PathStyle {
    double stroke_width = 0.01;
    bool dotted = false;
    double dot_radius = 0.01;
};

// One connected run of segments; consecutive segments share endpoints
// (C0 continuity).
struct Subpath {
    std::vector<CubicBezier> segments;
    bool closed = false;
};

struct VectorPath {
    std::vector<Subpath> subpaths;
    PathStyle style;

    [[nodiscard]] std::size_t segment_count() const {
        std::size_t n = 0;
        for (const Subpath& s : subpaths) n += s.segments.size();
        return n;
    }
};

/// Fits a piecewise cubic Bezier to the polyline: least-squares fit with
/// endpoint tangents estimated from neighboring points, splitting at the
/// worst point and recursing whenever the deviation exceeds tolerance.
/// Consecutive duplicate points are collapsed first. Throws DataError for
/// non-positive tolerance or when all points coincide.
[[nodiscard]] VectorPath fit_bezier(const Trajectory2& t, double tolerance);

/// 0.5% of the input bounding-box diagonal.
[[nodiscard]] double default_fit_tolerance(const Trajectory2& t);

/// One filled circle per trajectory point (4-segment Bezier approximation,
/// max radial deviation below 0.00028 x radius); no connecting strokes.
[[nodiscard]] VectorPath to_dotted(const Trajectory2& t, double dot_radius);

/// Exact polyline as a path: one straight segment per edge, control points
/// at the thirds.
[[nodiscard]] VectorPath polyline_path(const Trajectory2& t);

}  // namespace glyphtrace
