// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Natural cubic spline interpolation of 3D point sequences, parameterized
// by cumulative chord length.

#pragma once

#include <cstddef>
#include <vector>

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

// C2-continuous interpolating spline through n knots. Passes through every
// knot; second derivatives vanish at both ends. The parameter domain is
// [0, total_length()] in chord-length units.
class SplineCurve {
  public:
    [[nodiscard]] Point3 evaluate(double t) const;  // t clamped to the domain
    [[nodiscard]] double total_length() const { return knots_.back(); }
    [[nodiscard]] std::size_t knot_count() const { return knots_.size(); }
    [[nodiscard]] double knot_parameter(std::size_t i) const { return knots_[i]; }
    [[nodiscard]] Point3 knot_value(std::size_t i) const { return values_[i]; }

    friend SplineCurve interpolate_spline(const Trajectory3& t);

  private:
    SplineCurve() = default;

    std::vector<double> knots_;           // cumulative chord length, strictly increasing
    std::vector<Point3> values_;          // interpolated points
    std::vector<Point3> second_derivs_;   // per-axis M values, natural BC
};

/// Builds the spline after collapsing consecutive duplicate points. Throws
/// DataError when fewer than 4 distinct points remain.
[[nodiscard]] SplineCurve interpolate_spline(const Trajectory3& t);

/// m samples at uniform parameter spacing, both endpoints included.
[[nodiscard]] Trajectory3 sample_curve(const SplineCurve& c, std::size_t m);

}  // namespace glyphtrace
