// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/projection.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "glyphtrace/errors.hpp"

namespace glyphtrace {

namespace {

Eigen::Vector3d to_vec(Point3 p) { return {p.x, p.y, p.z}; }
Point3 to_point(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }

}  // namespace

PlaneFrame fit_plane(const Trajectory3& t) {
    if (t.points.size() < 3) throw DataError("plane fit needs at least 3 points");

    const auto n = static_cast<double>(t.points.size());
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const Point3& p : t.points) centroid += to_vec(p);
    centroid /= n;

    Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
    for (const Point3& p : t.points) {
        const Eigen::Vector3d d = to_vec(p) - centroid;
        scatter += d * d.transpose();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(scatter);  // eigenvalues ascending
    const Eigen::Vector3d evals = es.eigenvalues();
    if (evals(2) <= 0.0 || evals(1) <= 1e-12 * evals(2)) {
        throw DataError("collinear points: fitted plane is undefined");
    }

    Eigen::Vector3d normal = es.eigenvectors().col(0);
    // Canonical sign: largest-magnitude coordinate positive.
    int arg = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(normal(i)) > std::abs(normal(arg))) arg = i;
    }
    if (normal(arg) < 0.0) normal = -normal;

    const Eigen::Vector3d chord = to_vec(t.points.back()) - to_vec(t.points.front());
    Eigen::Vector3d u = chord - normal * normal.dot(chord);
    const double scale = std::sqrt(evals(2));
    if (u.norm() <= 1e-12 * (chord.norm() + scale)) {
        // Closed or chord-degenerate path: fall back to the dominant
        // in-plane scatter direction.
        u = es.eigenvectors().col(2);
        u -= normal * normal.dot(u);
    }
    u.normalize();
    const Eigen::Vector3d v = normal.cross(u);

    return {to_point(centroid), to_point(u), to_point(v), to_point(normal)};
}

Trajectory2 project(const Trajectory3& t, ProjectionPlane plane) {
    Trajectory2 out;
    out.sample_rate_hz = t.sample_rate_hz;
    out.label = t.label;
    out.points.reserve(t.points.size());

    switch (plane) {
        case ProjectionPlane::xy:
            for (const Point3& p : t.points) out.points.push_back({p.x, p.y});
            return out;
        case ProjectionPlane::xz:
            for (const Point3& p : t.points) out.points.push_back({p.x, p.z});
            return out;
        case ProjectionPlane::yz:
            for (const Point3& p : t.points) out.points.push_back({p.y, p.z});
            return out;
        case ProjectionPlane::fitted:
            break;
    }

    const PlaneFrame frame = fit_plane(t);
    for (const Point3& p : t.points) {
        const Point3 d = p - frame.origin;
        out.points.push_back({dot(d, frame.u), dot(d, frame.v)});
    }
    return out;
}

}  // namespace glyphtrace
