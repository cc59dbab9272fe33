// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/spline.hpp"

#include <algorithm>
#include <cmath>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

namespace {

double axis(Point3 p, int a) { return a == 0 ? p.x : a == 1 ? p.y : p.z; }
void set_axis(Point3& p, int a, double v) { (a == 0 ? p.x : a == 1 ? p.y : p.z) = v; }

// Natural-spline second derivatives for one axis on non-uniform knots
// (tridiagonal system, Thomas algorithm).
std::vector<double> solve_second_derivatives(const std::vector<double>& t,
                                             const std::vector<double>& y) {
    const std::size_t n = t.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) return m;

    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = t[i] - t[i - 1];
        const double h1 = t[i + 1] - t[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    // Forward sweep over interior rows; natural BC pins m[0] = m[n-1] = 0.
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double lower = t[i] - t[i - 1];
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
    }
    return m;
}

}  // namespace

SplineCurve interpolate_spline(const Trajectory3& t) {
    std::vector<Point3> pts;
    pts.reserve(t.points.size());
    for (const Point3& p : t.points) {
        if (pts.empty() || !(p == pts.back())) pts.push_back(p);
    }
    if (pts.size() < 4) {
        throw DataError("spline interpolation needs at least 4 distinct points, got " +
                        std::to_string(pts.size()));
    }

    SplineCurve c;
    c.values_ = std::move(pts);
    c.knots_.resize(c.values_.size());
    c.knots_[0] = 0.0;
    for (std::size_t i = 1; i < c.values_.size(); ++i) {
        c.knots_[i] = c.knots_[i - 1] + distance(c.values_[i - 1], c.values_[i]);
    }

    const std::size_t n = c.values_.size();
    c.second_derivs_.assign(n, Point3{});
    for (int a = 0; a < 3; ++a) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = axis(c.values_[i], a);
        const std::vector<double> m = solve_second_derivatives(c.knots_, y);
        for (std::size_t i = 0; i < n; ++i) set_axis(c.second_derivs_[i], a, m[i]);
    }
    return c;
}

Point3 SplineCurve::evaluate(double t) const {
    const double clamped = std::clamp(t, knots_.front(), knots_.back());
    auto it = std::upper_bound(knots_.begin(), knots_.end(), clamped);
    std::size_t seg = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
    seg = std::min(seg, knots_.size() - 2);

    const double h = knots_[seg + 1] - knots_[seg];
    const double u = knots_[seg + 1] - clamped;  // distance to right knot
    const double v = clamped - knots_[seg];      // distance to left knot

    Point3 out;
    for (int a = 0; a < 3; ++a) {
        const double y0 = axis(values_[seg], a);
        const double y1 = axis(values_[seg + 1], a);
        const double m0 = axis(second_derivs_[seg], a);
        const double m1 = axis(second_derivs_[seg + 1], a);
        const double value = (m0 * u * u * u + m1 * v * v * v) / (6.0 * h) +
                             (y0 / h - m0 * h / 6.0) * u + (y1 / h - m1 * h / 6.0) * v;
        set_axis(out, a, value);
    }
    return out;
}

Trajectory3 sample_curve(const SplineCurve& c, std::size_t m) {
    if (m < 2) throw DataError("curve sampling needs at least 2 points");
    Trajectory3 out;
    out.points.reserve(m);
    const double total = c.total_length();
    for (std::size_t j = 0; j < m; ++j) {
        const double t = total * static_cast<double>(j) / static_cast<double>(m - 1);
        out.points.push_back(c.evaluate(t));
    }
    return out;
}

}  // namespace glyphtrace
