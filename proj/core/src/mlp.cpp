// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/mlp.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/rng.hpp"

namespace glyphtrace {

namespace {

using RowIn = Eigen::Matrix<double, 1, kMlpInputDim>;
using RowHidden = Eigen::Matrix<double, 1, kMlpHiddenDim>;
using RowOut = Eigen::Matrix<double, 1, kMlpOutputDim>;

RowIn to_row(Point2 p) {
    RowIn r;
    r << p.x, p.y;
    return r;
}

}  // namespace

PairDataset build_pairs(const std::vector<Trajectory2>& letters, std::size_t m) {
    if (letters.size() < 2) throw DataError("pair enlargement needs at least 2 letters");
    if (m < 2) throw DataError("common length must be at least 2");

    std::vector<Trajectory2> resampled;
    resampled.reserve(letters.size());
    for (const Trajectory2& letter : letters) {
        resampled.push_back(resample_by_arclength(letter, m));
    }

    PairDataset d;
    d.common_length = m;
    const int n = static_cast<int>(letters.size());
    d.pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            d.pairs.push_back({resampled[static_cast<std::size_t>(i)],
                               resampled[static_cast<std::size_t>(j)], i, j});
        }
    }
    return d;
}

std::pair<PairDataset, PairDataset> split_train_test(const PairDataset& d, std::uint64_t seed) {
    if (d.pairs.size() < 2) throw DataError("need at least 2 pairs to split");
    Rng rng(seed);
    const std::size_t test_index = rng.uniform_index(d.pairs.size());

    PairDataset train;
    PairDataset test;
    train.common_length = test.common_length = d.common_length;
    train.pairs.reserve(d.pairs.size() - 1);
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        (i == test_index ? test : train).pairs.push_back(d.pairs[i]);
    }
    return {std::move(train), std::move(test)};
}

MlpModel init_mlp(std::uint64_t seed) {
    Rng rng(seed);
    MlpModel m;
    for (int i = 0; i < kMlpInputDim; ++i)
        for (int j = 0; j < kMlpHiddenDim; ++j) m.w1(i, j) = rng.uniform(0.0, 1.0);
    for (int j = 0; j < kMlpHiddenDim; ++j) m.b1(j) = rng.uniform(0.0, 0.1);
    for (int i = 0; i < kMlpHiddenDim; ++i)
        for (int j = 0; j < kMlpHiddenDim; ++j) m.w2(i, j) = rng.uniform(0.0, 1.0);
    for (int j = 0; j < kMlpHiddenDim; ++j) m.b2(j) = rng.uniform(0.0, 0.1);
    for (int i = 0; i < kMlpHiddenDim; ++i)
        for (int j = 0; j < kMlpOutputDim; ++j) m.w3(i, j) = rng.uniform(0.0, 1.0);
    for (int j = 0; j < kMlpOutputDim; ++j) m.b3(j) = rng.uniform(0.0, 0.1);
    return m;
}

ForwardTrace forward_trace(const MlpModel& model, Point2 x) {
    ForwardTrace t;
    const RowIn in = to_row(x);
    t.a1 = (in * model.w1 + model.b1).array().tanh();
    t.a2 = (t.a1 * model.w2 + model.b2).array().tanh();
    const RowOut y = t.a2 * model.w3 + model.b3;
    t.y = {y(0), y(1)};
    return t;
}

Point2 forward(const MlpModel& model, Point2 x) { return forward_trace(model, x).y; }

double train_cost(std::span<const Point2> predicted, std::span<const Point2> actual) {
    if (predicted.size() != actual.size()) {
        throw DataError("predicted/actual length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const Point2 e = predicted[i] - actual[i];
        sum += e.x * e.x + e.y * e.y;
    }
    return 0.5 * sum;
}

std::pair<double, MlpGradients> pair_cost_and_gradients(const MlpModel& model,
                                                        const TrajectoryPair& pair) {
    if (pair.input.points.size() != pair.output.points.size()) {
        throw DataError("pair trajectories differ in length");
    }

    MlpGradients g;
    g.w1.setZero();
    g.b1.setZero();
    g.w2.setZero();
    g.b2.setZero();
    g.w3.setZero();
    g.b3.setZero();

    double cost = 0.0;
    for (std::size_t p = 0; p < pair.input.points.size(); ++p) {
        const RowIn x = to_row(pair.input.points[p]);
        const RowHidden a1 = (x * model.w1 + model.b1).array().tanh();
        const RowHidden a2 = (a1 * model.w2 + model.b2).array().tanh();
        const RowOut y = a2 * model.w3 + model.b3;
        const RowOut target = to_row(pair.output.points[p]);

        const RowOut err = y - target;
        cost += 0.5 * err.squaredNorm();

        // d(cost)/dy = err; push it back through the two tanh layers.
        g.w3 += a2.transpose() * err;
        g.b3 += err;
        const RowHidden dz2 =
            (err * model.w3.transpose()).cwiseProduct(RowHidden::Ones() - a2.cwiseProduct(a2));
        g.w2 += a1.transpose() * dz2;
        g.b2 += dz2;
        const RowHidden dz1 =
            (dz2 * model.w2.transpose()).cwiseProduct(RowHidden::Ones() - a1.cwiseProduct(a1));
        g.w1 += x.transpose() * dz1;
        g.b1 += dz1;
    }
    return {cost, g};
}

double& param_ref(MlpModel& model, int i) {
    int idx = i;
    const int nw1 = kMlpInputDim * kMlpHiddenDim;
    if (idx < nw1) return model.w1(idx / kMlpHiddenDim, idx % kMlpHiddenDim);
    idx -= nw1;
    if (idx < kMlpHiddenDim) return model.b1(idx);
    idx -= kMlpHiddenDim;
    const int nw2 = kMlpHiddenDim * kMlpHiddenDim;
    if (idx < nw2) return model.w2(idx / kMlpHiddenDim, idx % kMlpHiddenDim);
    idx -= nw2;
    if (idx < kMlpHiddenDim) return model.b2(idx);
    idx -= kMlpHiddenDim;
    const int nw3 = kMlpHiddenDim * kMlpOutputDim;
    if (idx < nw3) return model.w3(idx / kMlpOutputDim, idx % kMlpOutputDim);
    idx -= nw3;
    return model.b3(idx);
}

double gradient_ref(const MlpGradients& g, int i) {
    int idx = i;
    const int nw1 = kMlpInputDim * kMlpHiddenDim;
    if (idx < nw1) return g.w1(idx / kMlpHiddenDim, idx % kMlpHiddenDim);
    idx -= nw1;
    if (idx < kMlpHiddenDim) return g.b1(idx);
    idx -= kMlpHiddenDim;
    const int nw2 = kMlpHiddenDim * kMlpHiddenDim;
    if (idx < nw2) return g.w2(idx / kMlpHiddenDim, idx % kMlpHiddenDim);
    idx -= nw2;
    if (idx < kMlpHiddenDim) return g.b2(idx);
    idx -= kMlpHiddenDim;
    const int nw3 = kMlpHiddenDim * kMlpOutputDim;
    if (idx < nw3) return g.w3(idx / kMlpOutputDim, idx % kMlpOutputDim);
    idx -= nw3;
    return g.b3(idx);
}

double dataset_cost(const MlpModel& model, const PairDataset& d) {
    if (d.pairs.empty()) return 0.0;
    double sum = 0.0;
    for (const TrajectoryPair& pair : d.pairs) {
        std::vector<Point2> predicted;
        predicted.reserve(pair.input.points.size());
        for (const Point2& p : pair.input.points) predicted.push_back(forward(model, p));
        sum += train_cost(predicted, pair.output.points);
    }
    return sum / static_cast<double>(d.pairs.size());
}

std::pair<MlpModel, TrainReport> train(MlpModel model, const PairDataset& d,
                                       const TrainConfig& cfg) {
    if (d.pairs.empty()) throw DataError("empty training set");
    if (cfg.learning_rate < 0.0) throw DataError("learning rate must be non-negative");

    Rng rng(cfg.seed);
    TrainReport report;
    for (int it = 0; it < cfg.iterations; ++it) {
        if (it % 100 == 0) report.cost_trace.push_back(dataset_cost(model, d));

        const std::size_t pick = rng.uniform_index(d.pairs.size());
        auto [cost, g] = pair_cost_and_gradients(model, d.pairs[pick]);
        if (!std::isfinite(cost)) {
            throw DataError("non-finite cost at iteration " + std::to_string(it));
        }
        const double lr = cfg.learning_rate;
        model.w1 -= lr * g.w1;
        model.b1 -= lr * g.b1;
        model.w2 -= lr * g.w2;
        model.b2 -= lr * g.b2;
        model.w3 -= lr * g.w3;
        model.b3 -= lr * g.b3;
    }
    report.cost_trace.push_back(dataset_cost(model, d));
    report.final_cost = report.cost_trace.back();
    if (!std::isfinite(report.final_cost)) {
        throw DataError("non-finite cost after training");
    }
    return {std::move(model), std::move(report)};
}

Trajectory2 generate_letter(const MlpModel& model, const Trajectory2& input) {
    Trajectory2 out;
    out.sample_rate_hz = input.sample_rate_hz;
    out.label = input.label;
    out.points.reserve(input.points.size());
    for (const Point2& p : input.points) out.points.push_back(forward(model, p));
    return out;
}

Trajectory3 extrude_z(const Trajectory2& t, std::uint64_t seed, double z_low, double z_high) {
    if (z_low > z_high) throw DataError("invalid extrusion range: low > high");
    Rng rng(seed);
    Trajectory3 out;
    out.sample_rate_hz = t.sample_rate_hz;
    out.label = t.label;
    out.points.reserve(t.points.size());
    for (const Point2& p : t.points) {
        out.points.push_back({p.x, p.y, rng.uniform(z_low, z_high)});
    }
    return out;
}

namespace {

nlohmann::json matrix_to_json(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename MatrixT>
void matrix_from_json(const nlohmann::json& j, MatrixT& m) {
    if (j.size() != static_cast<std::size_t>(m.rows())) throw DataError("matrix row count mismatch");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (row.size() != static_cast<std::size_t>(m.cols())) {
            throw DataError("matrix column count mismatch");
        }
        for (Eigen::Index j2 = 0; j2 < m.cols(); ++j2) {
            m(i, j2) = row.at(static_cast<std::size_t>(j2)).template get<double>();
        }
    }
}

nlohmann::json trajectory_to_json(const Trajectory2& t) {
    nlohmann::json points = nlohmann::json::array();
    for (const Point2& p : t.points) points.push_back({p.x, p.y});
    return {{"label", t.label}, {"sample_rate_hz", t.sample_rate_hz}, {"points", std::move(points)}};
}

Trajectory2 trajectory_from_json(const nlohmann::json& j) {
    Trajectory2 t;
    t.label = j.value("label", "");
    t.sample_rate_hz = j.value("sample_rate_hz", 10.0);
    for (const auto& p : j.at("points")) {
        t.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return t;
}

}  // namespace

void save_mlp(const MlpModel& model, std::ostream& out) {
    nlohmann::json j;
    j["format"] = "glyphtrace-mlp";
    j["version"] = 1;
    j["w1"] = matrix_to_json(model.w1);
    j["b1"] = matrix_to_json(model.b1);
    j["w2"] = matrix_to_json(model.w2);
    j["b2"] = matrix_to_json(model.b2);
    j["w3"] = matrix_to_json(model.w3);
    j["b3"] = matrix_to_json(model.b3);
    out << j.dump(2) << '\n';
    if (!out.good()) throw DataError("failed to write network model");
}

MlpModel load_mlp(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid network model file: ") + e.what());
    }
    if (j.value("format", "") != "glyphtrace-mlp" || j.value("version", 0) != 1) {
        throw DataError("unrecognized network model format");
    }
    MlpModel m;
    try {
        matrix_from_json(j.at("w1"), m.w1);
        matrix_from_json(j.at("b1"), m.b1);
        matrix_from_json(j.at("w2"), m.w2);
        matrix_from_json(j.at("b2"), m.b2);
        matrix_from_json(j.at("w3"), m.w3);
        matrix_from_json(j.at("b3"), m.b3);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid network model file: ") + e.what());
    }
    return m;
}

void save_pairs(const PairDataset& d, std::ostream& out) {
    // Letters are stored once and pairs reference them by index; build_pairs
    // guarantees every pair's trajectories match its indices.
    std::map<int, const Trajectory2*> letters;
    for (const TrajectoryPair& p : d.pairs) {
        letters.emplace(p.input_index, &p.input);
        letters.emplace(p.output_index, &p.output);
    }
    nlohmann::json j;
    j["format"] = "glyphtrace-pairs";
    j["version"] = 1;
    j["common_length"] = d.common_length;
    nlohmann::json letter_array = nlohmann::json::array();
    std::map<int, std::size_t> positions;
    for (const auto& [index, traj] : letters) {
        positions[index] = letter_array.size();
        nlohmann::json entry = trajectory_to_json(*traj);
        entry["index"] = index;
        letter_array.push_back(std::move(entry));
    }
    j["letters"] = std::move(letter_array);
    nlohmann::json pair_array = nlohmann::json::array();
    for (const TrajectoryPair& p : d.pairs) {
        pair_array.push_back({p.input_index, p.output_index});
    }
    j["pairs"] = std::move(pair_array);
    out << j.dump() << '\n';
    if (!out.good()) throw DataError("failed to write pair dataset");
}

PairDataset load_pairs(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid pair dataset file: ") + e.what());
    }
    if (j.value("format", "") != "glyphtrace-pairs" || j.value("version", 0) != 1) {
        throw DataError("unrecognized pair dataset format");
    }
    PairDataset d;
    try {
        d.common_length = j.at("common_length").get<std::size_t>();
        std::map<int, Trajectory2> letters;
        for (const auto& entry : j.at("letters")) {
            letters[entry.at("index").get<int>()] = trajectory_from_json(entry);
        }
        for (const auto& p : j.at("pairs")) {
            const int in_idx = p.at(0).get<int>();
            const int out_idx = p.at(1).get<int>();
            if (in_idx == out_idx) throw DataError("pair dataset contains a same-index pair");
            d.pairs.push_back({letters.at(in_idx), letters.at(out_idx), in_idx, out_idx});
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid pair dataset file: ") + e.what());
    } catch (const std::out_of_range&) {
        throw DataError("pair dataset references a missing letter index");
    }
    if (d.pairs.empty()) throw DataError("pair dataset has no pairs");
    return d;
}

}  // namespace glyphtrace
