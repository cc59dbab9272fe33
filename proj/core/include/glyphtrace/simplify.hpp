// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Ramer-Douglas-Peucker polyline simplification.

#pragma once

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

/// Distance from p to the segment [a, b] (to the point when a == b).
[[nodiscard]] double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Keeps a subsequence of the input containing both endpoints; every
/// discarded point lies within epsilon of the simplified polyline. The
/// comparison is strict, so epsilon = 0 drops only exactly-collinear
/// interior points. Throws DataError for negative epsilon or fewer than 2
/// points.
[[nodiscard]] Trajectory2 simplify_rdp(const Trajectory2& t, double epsilon);

}  // namespace glyphtrace
