// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// A small feedforward network mapping 2D points to 2D points, trained by
// stochastic gradient descent with exact backpropagated gradients. The
// architecture is fixed: 2 inputs, two tanh hidden layers of 10 units, a
// linear 2-unit output layer (162 parameters in total).
//
// Training pairs come from combinatorial enlargement of a small letter set:
// all ordered (input, output) combinations with distinct indices, giving
// n*(n-1) pairs for n letters. Trajectories are resampled to a common length
// so that training is point-to-point.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "glyphtrace/geometry.hpp"
#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

inline constexpr int kMlpInputDim = 2;
inline constexpr int kMlpHiddenDim = 10;
inline constexpr int kMlpOutputDim = 2;

struct MlpModel {
    Eigen::Matrix<double, kMlpInputDim, kMlpHiddenDim> w1;
    Eigen::Matrix<double, 1, kMlpHiddenDim> b1;
    Eigen::Matrix<double, kMlpHiddenDim, kMlpHiddenDim> w2;
    Eigen::Matrix<double, 1, kMlpHiddenDim> b2;
    Eigen::Matrix<double, kMlpHiddenDim, kMlpOutputDim> w3;
    Eigen::Matrix<double, 1, kMlpOutputDim> b3;

    MlpModel() {
        w1.setZero();
        b1.setZero();
        w2.setZero();
        b2.setZero();
        w3.setZero();
        b3.setZero();
    }

    static constexpr int parameter_count() {
        return kMlpInputDim * kMlpHiddenDim + kMlpHiddenDim +
               kMlpHiddenDim * kMlpHiddenDim + kMlpHiddenDim +
               kMlpHiddenDim * kMlpOutputDim + kMlpOutputDim;
    }
};

static_assert(MlpModel::parameter_count() == 162);

struct TrainConfig {
    double learning_rate = 0.0001;
    int iterations = 10000;
    std::uint64_t seed = 0;
};

struct TrajectoryPair {
    Trajectory2 input;
    Trajectory2 output;
    int input_index = 0;
    int output_index = 0;
};

struct PairDataset {
    std::vector<TrajectoryPair> pairs;
    std::size_t common_length = 0;  // points per trajectory after resampling
};

struct TrainReport {
    // Mean per-pair cost over the train split, evaluated before iteration 0
    // and every 100 iterations thereafter, plus once after the final
    // iteration.
    std::vector<double> cost_trace;
    double final_cost = 0.0;
};

/// All ordered letter pairs (i, j) with i != j, input index ascending and
/// output index ascending within it, every trajectory resampled to m points.
/// Throws DataError for fewer than 2 letters or degenerate letters.
[[nodiscard]] PairDataset build_pairs(const std::vector<Trajectory2>& letters, std::size_t m);

/// Moves exactly one seed-chosen pair into the test split; the rest stay in
/// the train split in order.
[[nodiscard]] std::pair<PairDataset, PairDataset> split_train_test(const PairDataset& d,
                                                                   std::uint64_t seed);

/// Weights i.i.d. uniform [0, 1], biases uniform [0, 0.1]. Draw order is
/// fixed: w1 row-major, b1, w2 row-major, b2, w3 row-major, b3.
[[nodiscard]] MlpModel init_mlp(std::uint64_t seed);

/// a1 = tanh(x*w1 + b1); a2 = tanh(a1*w2 + b2); y = a2*w3 + b3.
[[nodiscard]] Point2 forward(const MlpModel& model, Point2 x);

struct ForwardTrace {
    Eigen::Matrix<double, 1, kMlpHiddenDim> a1;
    Eigen::Matrix<double, 1, kMlpHiddenDim> a2;
    Point2 y;
};

/// forward() with the hidden activations exposed for inspection.
[[nodiscard]] ForwardTrace forward_trace(const MlpModel& model, Point2 x);

/// Sum of squared coordinate differences over all points, divided by 2.
/// Throws DataError on length mismatch.
[[nodiscard]] double train_cost(std::span<const Point2> predicted,
                                std::span<const Point2> actual);

struct MlpGradients {
    Eigen::Matrix<double, kMlpInputDim, kMlpHiddenDim> w1;
    Eigen::Matrix<double, 1, kMlpHiddenDim> b1;
    Eigen::Matrix<double, kMlpHiddenDim, kMlpHiddenDim> w2;
    Eigen::Matrix<double, 1, kMlpHiddenDim> b2;
    Eigen::Matrix<double, kMlpHiddenDim, kMlpOutputDim> w3;
    Eigen::Matrix<double, 1, kMlpOutputDim> b3;
};

/// Cost of one pair and its exact gradients with respect to every parameter,
/// accumulated over all points of the pair.
[[nodiscard]] std::pair<double, MlpGradients> pair_cost_and_gradients(const MlpModel& model,
                                                                      const TrajectoryPair& pair);

/// Mutable reference to parameter i in the fixed flattening order used by
/// init_mlp. Valid i is [0, parameter_count()).
[[nodiscard]] double& param_ref(MlpModel& model, int i);

/// Gradient entry for parameter i, same flattening order as param_ref.
[[nodiscard]] double gradient_ref(const MlpGradients& g, int i);

/// Mean per-pair train cost over a dataset.
[[nodiscard]] double dataset_cost(const MlpModel& model, const PairDataset& d);

/// SGD: each iteration draws one training pair (seeded uniform), computes
/// the exact gradient of its cost, and takes one step at the configured
/// rate. Throws DataError if a non-finite cost is encountered.
[[nodiscard]] std::pair<MlpModel, TrainReport> train(MlpModel model, const PairDataset& d,
                                                     const TrainConfig& cfg);

/// Applies forward() to every point of the input letter.
[[nodiscard]] Trajectory2 generate_letter(const MlpModel& model, const Trajectory2& input);

/// Assigns each point an i.i.d. uniform z in [z_low, z_high]; x and y are
/// preserved exactly. Throws DataError when z_low > z_high.
[[nodiscard]] Trajectory3 extrude_z(const Trajectory2& t, std::uint64_t seed, double z_low,
                                    double z_high);

/// Versioned full-precision serialization for models and pair datasets.
void save_mlp(const MlpModel& model, std::ostream& out);
[[nodiscard]] MlpModel load_mlp(std::istream& in);
void save_pairs(const PairDataset& d, std::ostream& out);
[[nodiscard]] PairDataset load_pairs(std::istream& in);

}  // namespace glyphtrace
