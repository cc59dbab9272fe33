// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/bezier.hpp"

#include <array>
#include <cmath>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

Point2 CubicBezier::evaluate(double u) const {
    const double w = 1.0 - u;
    const double b0 = w * w * w;
    const double b1 = 3.0 * w * w * u;
    const double b2 = 3.0 * w * u * u;
    const double b3 = u * u * u;
    return b0 * p0 + b1 * p1 + b2 * p2 + b3 * p3;
}

namespace {

Point2 normalized(Point2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

// First and second derivatives of a cubic Bezier.
Point2 bezier_d1(const CubicBezier& b, double u) {
    const double w = 1.0 - u;
    return 3.0 * (w * w * (b.p1 - b.p0) + 2.0 * w * u * (b.p2 - b.p1) + u * u * (b.p3 - b.p2));
}

Point2 bezier_d2(const CubicBezier& b, double u) {
    const double w = 1.0 - u;
    return 6.0 * (w * (b.p2 - 2.0 * b.p1 + b.p0) + u * (b.p3 - 2.0 * b.p2 + b.p1));
}

class SchneiderFitter {
  public:
    SchneiderFitter(const std::vector<Point2>& pts, double tolerance)
        : pts_(pts), tol2_(tolerance * tolerance) {}

    std::vector<CubicBezier> run() {
        const Point2 that1 = normalized(pts_[1] - pts_[0]);
        const Point2 that2 = normalized(pts_[pts_.size() - 2] - pts_.back());
        fit(0, pts_.size() - 1, that1, that2);
        return std::move(segments_);
    }

  private:
    void fit(std::size_t first, std::size_t last, Point2 that1, Point2 that2) {
        if (last - first == 1) {
            const double d = distance(pts_[first], pts_[last]) / 3.0;
            segments_.push_back({pts_[first], pts_[first] + that1 * d, pts_[last] + that2 * d,
                                 pts_[last]});
            return;
        }

        std::vector<double> u = chord_parameterize(first, last);
        CubicBezier bez = generate(first, last, u, that1, that2);
        std::size_t split = 0;
        double err2 = max_error(first, last, bez, u, split);
        if (err2 <= tol2_) {
            segments_.push_back(bez);
            return;
        }

        // Close misses are usually a parameterization problem; retry with
        // Newton-refined parameters before giving up and splitting.
        if (err2 <= 16.0 * tol2_) {
            for (int iter = 0; iter < 4; ++iter) {
                reparameterize(first, last, bez, u);
                bez = generate(first, last, u, that1, that2);
                err2 = max_error(first, last, bez, u, split);
                if (err2 <= tol2_) {
                    segments_.push_back(bez);
                    return;
                }
            }
        }

        const Point2 center = center_tangent(split);
        fit(first, split, that1, center);
        fit(split, last, {-center.x, -center.y}, that2);
    }

    std::vector<double> chord_parameterize(std::size_t first, std::size_t last) const {
        std::vector<double> u(last - first + 1, 0.0);
        for (std::size_t i = first + 1; i <= last; ++i) {
            u[i - first] = u[i - first - 1] + distance(pts_[i - 1], pts_[i]);
        }
        const double total = u.back();
        for (double& v : u) v /= total;
        return u;
    }

    CubicBezier generate(std::size_t first, std::size_t last, const std::vector<double>& u,
                         Point2 that1, Point2 that2) const {
        const Point2 p0 = pts_[first];
        const Point2 p3 = pts_[last];

        double c00 = 0.0, c01 = 0.0, c11 = 0.0, x0 = 0.0, x1 = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double t = u[i];
            const double w = 1.0 - t;
            const double b0 = w * w * w;
            const double b1 = 3.0 * w * w * t;
            const double b2 = 3.0 * w * t * t;
            const double b3 = t * t * t;
            const Point2 a0 = that1 * b1;
            const Point2 a1 = that2 * b2;
            c00 += dot(a0, a0);
            c01 += dot(a0, a1);
            c11 += dot(a1, a1);
            const Point2 residual = pts_[first + i] - ((b0 + b1) * p0 + (b2 + b3) * p3);
            x0 += dot(a0, residual);
            x1 += dot(a1, residual);
        }

        const double det = c00 * c11 - c01 * c01;
        double alpha1 = 0.0;
        double alpha2 = 0.0;
        if (det != 0.0) {
            alpha1 = (c11 * x0 - c01 * x1) / det;
            alpha2 = (c00 * x1 - c01 * x0) / det;
        }

        // Wu/Barsky fallback for unusable solutions: tiny, negative, NaN, or
        // runaway handle lengths from an ill-conditioned system.
        const double seg_len = distance(p0, p3);
        const double lo = 1e-6 * seg_len;
        const double hi = 3.0 * seg_len;
        if (!(alpha1 > lo) || !(alpha2 > lo) || alpha1 > hi || alpha2 > hi) {
            alpha1 = alpha2 = seg_len / 3.0;
        }
        return {p0, p0 + that1 * alpha1, p3 + that2 * alpha2, p3};
    }

    double max_error(std::size_t first, std::size_t last, const CubicBezier& bez,
                     const std::vector<double>& u, std::size_t& split) const {
        split = (first + last + 1) / 2;
        double max_d2 = 0.0;
        for (std::size_t i = first + 1; i < last; ++i) {
            const double d2 = squared_norm(bez.evaluate(u[i - first]) - pts_[i]);
            if (d2 > max_d2) {
                max_d2 = d2;
                split = i;
            }
        }
        return max_d2;
    }

    void reparameterize(std::size_t first, std::size_t last, const CubicBezier& bez,
                        std::vector<double>& u) const {
        for (std::size_t i = first; i <= last; ++i) {
            double& t = u[i - first];
            const Point2 diff = bez.evaluate(t) - pts_[i];
            const Point2 d1 = bezier_d1(bez, t);
            const Point2 d2 = bezier_d2(bez, t);
            const double denom = dot(d1, d1) + dot(diff, d2);
            if (denom == 0.0) continue;
            t -= dot(diff, d1) / denom;
            t = t < 0.0 ? 0.0 : t > 1.0 ? 1.0 : t;
        }
    }

    Point2 center_tangent(std::size_t center) const {
        Point2 v = pts_[center - 1] - pts_[center + 1];
        if (squared_norm(v) == 0.0) v = pts_[center - 1] - pts_[center];
        return normalized(v);
    }

    const std::vector<Point2>& pts_;
    double tol2_;
    std::vector<CubicBezier> segments_;
};

std::vector<Point2> collapse_duplicates(const std::vector<Point2>& pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& p : pts) {
        if (out.empty() || !(p == out.back())) out.push_back(p);
    }
    return out;
}

}  // namespace

VectorPath fit_bezier(const Trajectory2& t, double tolerance) {
    if (tolerance <= 0.0) throw DataError("fit tolerance must be positive");
    const std::vector<Point2> pts = collapse_duplicates(t.points);
    if (pts.size() < 2) throw DataError("degenerate input: all points identical");

    SchneiderFitter fitter(pts, tolerance);
    VectorPath path;
    path.subpaths.push_back({fitter.run(), false});
    return path;
}

double default_fit_tolerance(const Trajectory2& t) {
    return 0.005 * bounding_box(t).diagonal();
}

VectorPath polyline_path(const Trajectory2& t) {
    if (t.points.size() < 2) throw DataError("polyline path needs at least 2 points");
    VectorPath path;
    Subpath sub;
    sub.segments.reserve(t.points.size() - 1);
    for (std::size_t i = 1; i < t.points.size(); ++i) {
        const Point2 a = t.points[i - 1];
        const Point2 b = t.points[i];
        sub.segments.push_back({a, lerp(a, b, 1.0 / 3.0), lerp(a, b, 2.0 / 3.0), b});
    }
    path.subpaths.push_back(std::move(sub));
    return path;
}

VectorPath to_dotted(const Trajectory2& t, double dot_radius) {
    if (t.points.empty()) throw DataError("cannot dot an empty trajectory");
    if (dot_radius <= 0.0) throw DataError("dot radius must be positive");

    // 4-arc circle; kappa = 4/3 * (sqrt(2) - 1).
    constexpr double kKappa = 0.55228474983079356;
    const double r = dot_radius;
    const double h = kKappa * r;

    VectorPath path;
    path.style.dotted = true;
    path.style.dot_radius = dot_radius;
    path.subpaths.reserve(t.points.size());
    for (const Point2& c : t.points) {
        const Point2 east{c.x + r, c.y};
        const Point2 north{c.x, c.y + r};
        const Point2 west{c.x - r, c.y};
        const Point2 south{c.x, c.y - r};
        Subpath dot;
        dot.closed = true;
        dot.segments = {
            {east, {east.x, east.y + h}, {north.x + h, north.y}, north},
            {north, {north.x - h, north.y}, {west.x, west.y + h}, west},
            {west, {west.x, west.y - h}, {south.x - h, south.y}, south},
            {south, {south.x + h, south.y}, {east.x, east.y - h}, east},
        };
        path.subpaths.push_back(std::move(dot));
    }
    return path;
}

}  // namespace glyphtrace
