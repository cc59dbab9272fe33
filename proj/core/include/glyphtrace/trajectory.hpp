// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Recorded robot trajectories: ingestion, resampling, normalization.
//
// A trajectory is an ordered sequence of points sampled at a fixed rate
// (nominally 10 Hz); timestamps are implicit, index i maps to time
// i / sample_rate_hz. All operations are pure functions over immutable
// inputs and are safe to call concurrently.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "glyphtrace/geometry.hpp"

namespace glyphtrace {

template <typename PointT>
struct BasicTrajectory {
    std::vector<PointT> points;
    double sample_rate_hz = 10.0;
    std::string label;  // optional glyph identifier, empty if none

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

using Trajectory2 = BasicTrajectory<Point2>;
using Trajectory3 = BasicTrajectory<Point3>;

/// Parses comma-separated coordinate text, one point per line, as many
/// values per line as PointT has dimensions. Blank lines and `#` comments
/// are skipped; a single leading non-numeric line is treated as a header.
/// Throws DataError on malformed lines (with line number), non-finite
/// values, or fewer than 2 points.
template <typename PointT>
[[nodiscard]] BasicTrajectory<PointT> parse_trajectory(std::istream& in);

/// Writes the mirror of the input format: "x, y" (or "x, y, z") per line,
/// six fractional digits. Values parsed from text with at most six
/// fractional digits survive a write/parse round trip bit-identically.
template <typename PointT>
void write_trajectory(const BasicTrajectory<PointT>& t, std::ostream& out);

/// Resamples to m points equidistant along the polyline (linear
/// interpolation between input samples). Endpoints are preserved exactly.
/// Throws DataError if m < 2 or the trajectory has zero arc length.
template <typename PointT>
[[nodiscard]] BasicTrajectory<PointT> resample_by_arclength(const BasicTrajectory<PointT>& t,
                                                            std::size_t m);

/// Tight axis-aligned box over all points.
[[nodiscard]] BoundingBox bounding_box(const Trajectory2& t);

/// True iff every coordinate lies in the closed interval [-1, 1].
template <typename PointT>
[[nodiscard]] bool check_unit_range(const BasicTrajectory<PointT>& t);

/// Aspect-preserving affine map (uniform scale + translation) placing the
/// trajectory inside [-1, 1]^2 with the larger bounding-box half-extent
/// mapped to 1. Throws DataError when the bounding box is degenerate in
/// both axes.
[[nodiscard]] Trajectory2 normalize_to_unit(const Trajectory2& t);

extern template BasicTrajectory<Point2> parse_trajectory<Point2>(std::istream&);
extern template BasicTrajectory<Point3> parse_trajectory<Point3>(std::istream&);
extern template void write_trajectory<Point2>(const Trajectory2&, std::ostream&);
extern template void write_trajectory<Point3>(const Trajectory3&, std::ostream&);
extern template Trajectory2 resample_by_arclength<Point2>(const Trajectory2&, std::size_t);
extern template Trajectory3 resample_by_arclength<Point3>(const Trajectory3&, std::size_t);
extern template bool check_unit_range<Point2>(const Trajectory2&);
extern template bool check_unit_range<Point3>(const Trajectory3&);

}  // namespace glyphtrace
