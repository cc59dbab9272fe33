// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// 2D Gaussian mixture fitting by expectation-maximization and extraction of
// a generalized curve from ordered component centers.
//
// Fitting is deterministic: identical (points, k, seed, max_iter, tol)
// produce a bit-identical model. The E-step is evaluated in log space with
// log-sum-exp; the M-step applies an eigenvalue floor of
// 1e-6 x (global data variance) to every covariance so that components
// collapsing onto repeated dwell points stay positive definite.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

struct GaussianComponent {
    double weight = 0.0;
    Point2 mean;
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Identity();
};

struct GmmModel {
    std::vector<GaussianComponent> components;

    [[nodiscard]] int k() const { return static_cast<int>(components.size()); }
};

struct FitReport {
    std::vector<double> log_likelihood_trace;  // one entry per E-step, first is the initial model
    int iterations_run = 0;                    // completed EM iterations (M-steps)
    bool converged = false;
};

struct EmOptions {
    int max_iter = 500;
    double tol = 1e-8;  // absolute log-likelihood improvement
    // Invoked after each M-step with the updated model; used by tests to
    // observe per-iteration invariants. Leave empty for normal use.
    std::function<void(const GmmModel&)> on_iteration;
};

/// k-means++-style seeding: means drawn from the data, identity-scaled
/// covariances at the global data variance, uniform weights.
[[nodiscard]] GmmModel init_gmm(std::span<const Point2> points, int k, std::uint64_t seed);

/// Runs EM from an explicit initial model. The trace records the
/// log-likelihood of every model actually used, including the returned one.
[[nodiscard]] std::pair<GmmModel, FitReport> em_fit(std::span<const Point2> points,
                                                    GmmModel init, const EmOptions& opts = {});

/// init_gmm + em_fit. Throws DataError when k < 1, points.size() < k, or
/// all points coincide.
[[nodiscard]] std::pair<GmmModel, FitReport> fit_gmm(std::span<const Point2> points, int k,
                                                     std::uint64_t seed, int max_iter = 500,
                                                     double tol = 1e-8);

/// Sum over points of the log mixture density (log-sum-exp over components).
/// Empty point set yields 0.
[[nodiscard]] double log_likelihood(const GmmModel& model, std::span<const Point2> points);

/// E-step responsibilities, one row per point, one column per component.
/// Rows sum to 1. Exposed as a testing and inspection hook.
[[nodiscard]] Eigen::MatrixXd responsibilities(const GmmModel& model,
                                               std::span<const Point2> points);

/// Orders component means by the arc-length fraction of their nearest point
/// on the reference trajectory (ties keep component order) and returns the
/// resulting polyline. Throws DataError for models with fewer than 2
/// components.
[[nodiscard]] Trajectory2 extract_generalized_curve(const GmmModel& model,
                                                    const Trajectory2& reference);

struct GeneralizeResult {
    GmmModel model;
    FitReport report;
    Trajectory2 curve;
};

/// End-to-end generalization: resamples all demonstrations to a common
/// length, pools their points, fits a k-component mixture, and extracts the
/// ordered-mean curve using the first demonstration as the reference.
[[nodiscard]] GeneralizeResult generalize_letter_full(
    const std::vector<Trajectory2>& demonstrations, int k = 10, std::uint64_t seed = 0);

/// generalize_letter_full, returning just the curve.
[[nodiscard]] Trajectory2 generalize_letter(const std::vector<Trajectory2>& demonstrations,
                                            int k = 10, std::uint64_t seed = 0);

/// Versioned full-precision model serialization; round-trip stable.
void save_gmm(const GmmModel& model, std::ostream& out);
[[nodiscard]] GmmModel load_gmm(std::istream& in);

}  // namespace glyphtrace
