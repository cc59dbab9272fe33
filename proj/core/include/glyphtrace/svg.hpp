// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// SVG 1.1 export of vector paths.

#pragma once

#include <iosfwd>
#include <vector>

#include "glyphtrace/bezier.hpp"
#include "glyphtrace/geometry.hpp"

namespace glyphtrace {

/// Writes an SVG 1.1 document with one path element per VectorPath. The
/// viewBox is taken from the canvas; the workspace y-up convention is
/// flipped to SVG's y-down by reflecting coordinates about the canvas
/// midline. Coordinates are emitted with 4 decimal places. Throws DataError
/// on an empty path list or write failure.
void export_svg(const std::vector<VectorPath>& paths, const BoundingBox& canvas,
                std::ostream& out);

}  // namespace glyphtrace
