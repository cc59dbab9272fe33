// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Orthogonal projection of 3D trajectories onto a principal or least-squares
// fitted plane.

#pragma once

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

enum class ProjectionPlane { xy, xz, yz, fitted };

// Orthonormal in-plane frame used by fitted projection: origin at the
// centroid, u along the projected start-to-end chord, v = normal x u.
struct PlaneFrame {
    Point3 origin;
    Point3 u;
    Point3 v;
    Point3 normal;
};

/// Least-squares plane through the points (normal = smallest principal
/// direction of the centered scatter). Throws DataError when the points are
/// collinear or coincident.
[[nodiscard]] PlaneFrame fit_plane(const Trajectory3& t);

/// Projects onto the requested plane. Principal planes drop the remaining
/// axis; the fitted plane maps points to in-plane (u, v) coordinates.
[[nodiscard]] Trajectory2 project(const Trajectory3& t, ProjectionPlane plane);

}  // namespace glyphtrace
