// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/gmm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/rng.hpp"

namespace glyphtrace {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2*pi)
constexpr double kFloorRatio = 1e-6;               // eigenvalue floor, relative to data variance
constexpr double kWeightFloor = 1e-12;

Eigen::Vector2d to_vec(Point2 p) { return {p.x, p.y}; }

// Mean of the per-axis population variances of the pooled data.
double global_variance(std::span<const Point2> points) {
    const double n = static_cast<double>(points.size());
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const Point2& p : points) mean += to_vec(p);
    mean /= n;
    double ss = 0.0;
    for (const Point2& p : points) ss += (to_vec(p) - mean).squaredNorm();
    return ss / (2.0 * n);
}

// Clamp both eigenvalues to at least floor_value, preserving eigenvectors.
Eigen::Matrix2d apply_eigenvalue_floor(const Eigen::Matrix2d& cov, double floor_value) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
    Eigen::Vector2d evals = es.eigenvalues();
    if (evals(0) >= floor_value && evals(1) >= floor_value) return cov;
    evals(0) = std::max(evals(0), floor_value);
    evals(1) = std::max(evals(1), floor_value);
    const Eigen::Matrix2d v = es.eigenvectors();
    Eigen::Matrix2d floored = v * evals.asDiagonal() * v.transpose();
    return 0.5 * (floored + floored.transpose());
}

struct ComponentCache {
    Eigen::Matrix2d inv;
    Eigen::Vector2d mean;
    double log_norm;  // log(weight) - log(2*pi) - 0.5*log(det)
};

std::vector<ComponentCache> build_cache(const GmmModel& model) {
    std::vector<ComponentCache> cache;
    cache.reserve(model.components.size());
    for (const GaussianComponent& c : model.components) {
        const double det = c.covariance.determinant();
        ComponentCache e;
        e.inv = c.covariance.inverse();
        e.mean = to_vec(c.mean);
        e.log_norm = (c.weight > 0.0 ? std::log(c.weight)
                                     : -std::numeric_limits<double>::infinity()) -
                     kLog2Pi - 0.5 * std::log(det);
        cache.push_back(e);
    }
    return cache;
}

double log_component_density(const ComponentCache& c, const Eigen::Vector2d& x) {
    const Eigen::Vector2d d = x - c.mean;
    return c.log_norm - 0.5 * d.dot(c.inv * d);
}

// One E-step: fills resp (n x k, rows sum to 1) and returns the total
// log-likelihood of the current model.
double e_step(const GmmModel& model, std::span<const Point2> points, Eigen::MatrixXd& resp) {
    const auto cache = build_cache(model);
    const auto n = static_cast<Eigen::Index>(points.size());
    const auto k = static_cast<Eigen::Index>(model.components.size());
    double total = 0.0;
    Eigen::VectorXd logp(k);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Vector2d x = to_vec(points[static_cast<std::size_t>(i)]);
        double max_log = -std::numeric_limits<double>::infinity();
        for (Eigen::Index c = 0; c < k; ++c) {
            logp(c) = log_component_density(cache[static_cast<std::size_t>(c)], x);
            max_log = std::max(max_log, logp(c));
        }
        double sum = 0.0;
        for (Eigen::Index c = 0; c < k; ++c) sum += std::exp(logp(c) - max_log);
        const double lse = max_log + std::log(sum);
        for (Eigen::Index c = 0; c < k; ++c) resp(i, c) = std::exp(logp(c) - lse);
        total += lse;
    }
    return total;
}

void m_step(std::span<const Point2> points, const Eigen::MatrixXd& resp, double floor_value,
            GmmModel& model) {
    const auto n = static_cast<Eigen::Index>(points.size());
    const auto k = static_cast<Eigen::Index>(model.components.size());
    bool weight_floored = false;
    for (Eigen::Index c = 0; c < k; ++c) {
        double nk = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) nk += resp(i, c);
        GaussianComponent& comp = model.components[static_cast<std::size_t>(c)];
        if (nk <= kWeightFloor * static_cast<double>(n)) {
            // Starved component: keep its shape, floor its weight.
            comp.weight = kWeightFloor;
            weight_floored = true;
            continue;
        }
        Eigen::Vector2d mean = Eigen::Vector2d::Zero();
        for (Eigen::Index i = 0; i < n; ++i) {
            mean += resp(i, c) * to_vec(points[static_cast<std::size_t>(i)]);
        }
        mean /= nk;
        Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Vector2d d = to_vec(points[static_cast<std::size_t>(i)]) - mean;
            cov += resp(i, c) * (d * d.transpose());
        }
        cov /= nk;
        comp.weight = nk / static_cast<double>(n);
        comp.mean = {mean(0), mean(1)};
        comp.covariance = apply_eigenvalue_floor(cov, floor_value);
    }
    if (weight_floored) {
        double sum = 0.0;
        for (const auto& c : model.components) sum += c.weight;
        for (auto& c : model.components) c.weight /= sum;
    }
}

}  // namespace

GmmModel init_gmm(std::span<const Point2> points, int k, std::uint64_t seed) {
    if (k < 1) throw DataError("component count must be at least 1");
    if (points.size() < static_cast<std::size_t>(k)) {
        throw DataError("need at least k points to fit k components");
    }

    const double var = global_variance(points);
    if (var <= 0.0) throw DataError("degenerate input: all points identical");

    Rng rng(seed);
    const std::size_t n = points.size();
    std::vector<Eigen::Vector2d> means;
    means.reserve(static_cast<std::size_t>(k));
    means.push_back(to_vec(points[rng.uniform_index(n)]));

    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = (to_vec(points[i]) - means[0]).squaredNorm();

    while (means.size() < static_cast<std::size_t>(k)) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = rng.uniform(0.0, total);
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc > target) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = rng.uniform_index(n);  // remaining points coincide with chosen means
        }
        means.push_back(to_vec(points[pick]));
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], (to_vec(points[i]) - means.back()).squaredNorm());
        }
    }

    GmmModel model;
    model.components.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        auto& comp = model.components[static_cast<std::size_t>(c)];
        comp.weight = 1.0 / static_cast<double>(k);
        comp.mean = {means[static_cast<std::size_t>(c)](0), means[static_cast<std::size_t>(c)](1)};
        comp.covariance = var * Eigen::Matrix2d::Identity();
    }
    return model;
}

std::pair<GmmModel, FitReport> em_fit(std::span<const Point2> points, GmmModel model,
                                      const EmOptions& opts) {
    if (points.empty()) throw DataError("cannot fit a mixture to an empty point set");
    if (model.components.empty()) throw DataError("empty initial model");

    const double floor_value = kFloorRatio * global_variance(points);
    const auto n = static_cast<Eigen::Index>(points.size());
    const auto k = static_cast<Eigen::Index>(model.components.size());
    Eigen::MatrixXd resp(n, k);

    FitReport report;
    report.log_likelihood_trace.push_back(e_step(model, points, resp));
    for (int it = 0; it < opts.max_iter; ++it) {
        m_step(points, resp, floor_value, model);
        ++report.iterations_run;
        if (opts.on_iteration) opts.on_iteration(model);
        const double ll = e_step(model, points, resp);
        report.log_likelihood_trace.push_back(ll);
        const double prev = report.log_likelihood_trace[report.log_likelihood_trace.size() - 2];
        if (ll - prev < opts.tol) {
            report.converged = true;
            break;
        }
    }
    return {std::move(model), std::move(report)};
}

std::pair<GmmModel, FitReport> fit_gmm(std::span<const Point2> points, int k, std::uint64_t seed,
                                       int max_iter, double tol) {
    EmOptions opts;
    opts.max_iter = max_iter;
    opts.tol = tol;
    return em_fit(points, init_gmm(points, k, seed), opts);
}

double log_likelihood(const GmmModel& model, std::span<const Point2> points) {
    if (points.empty()) return 0.0;
    const auto cache = build_cache(model);
    double total = 0.0;
    for (const Point2& p : points) {
        const Eigen::Vector2d x = to_vec(p);
        double max_log = -std::numeric_limits<double>::infinity();
        std::vector<double> logp(cache.size());
        for (std::size_t c = 0; c < cache.size(); ++c) {
            logp[c] = log_component_density(cache[c], x);
            max_log = std::max(max_log, logp[c]);
        }
        double sum = 0.0;
        for (const double lp : logp) sum += std::exp(lp - max_log);
        total += max_log + std::log(sum);
    }
    return total;
}

Eigen::MatrixXd responsibilities(const GmmModel& model, std::span<const Point2> points) {
    Eigen::MatrixXd resp(static_cast<Eigen::Index>(points.size()),
                         static_cast<Eigen::Index>(model.components.size()));
    e_step(model, points, resp);
    return resp;
}

Trajectory2 extract_generalized_curve(const GmmModel& model, const Trajectory2& reference) {
    if (model.components.size() < 2) {
        throw DataError("degenerate curve: need at least 2 component means");
    }
    if (reference.points.size() < 2) throw DataError("reference trajectory too short");

    const std::size_t n = reference.points.size();
    std::vector<double> cum(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        cum[i] = cum[i - 1] + distance(reference.points[i - 1], reference.points[i]);
    }
    const double total = cum.back();
    if (total <= 0.0) throw DataError("zero-length reference trajectory");

    struct Entry {
        double fraction;
        std::size_t component;
    };
    std::vector<Entry> order;
    order.reserve(model.components.size());
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const Point2 mean = model.components[c].mean;
        std::size_t best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const double d2 = squared_norm(reference.points[i] - mean);
            if (d2 < best_d2) {
                best_d2 = d2;
                best = i;
            }
        }
        order.push_back({cum[best] / total, c});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Entry& a, const Entry& b) { return a.fraction < b.fraction; });

    Trajectory2 curve;
    curve.sample_rate_hz = reference.sample_rate_hz;
    curve.label = reference.label;
    curve.points.reserve(order.size());
    for (const Entry& e : order) curve.points.push_back(model.components[e.component].mean);
    return curve;
}

GeneralizeResult generalize_letter_full(const std::vector<Trajectory2>& demonstrations, int k,
                                        std::uint64_t seed) {
    if (demonstrations.empty()) throw DataError("no demonstrations given");

    std::size_t common = 0;
    for (const Trajectory2& d : demonstrations) common = std::max(common, d.points.size());

    std::vector<Point2> pooled;
    pooled.reserve(common * demonstrations.size());
    Trajectory2 reference;
    for (std::size_t i = 0; i < demonstrations.size(); ++i) {
        Trajectory2 resampled = resample_by_arclength(demonstrations[i], common);
        if (i == 0) reference = resampled;
        pooled.insert(pooled.end(), resampled.points.begin(), resampled.points.end());
    }

    GeneralizeResult result;
    std::tie(result.model, result.report) = fit_gmm(pooled, k, seed);
    result.curve = extract_generalized_curve(result.model, reference);
    return result;
}

Trajectory2 generalize_letter(const std::vector<Trajectory2>& demonstrations, int k,
                              std::uint64_t seed) {
    return generalize_letter_full(demonstrations, k, seed).curve;
}

void save_gmm(const GmmModel& model, std::ostream& out) {
    nlohmann::json j;
    j["format"] = "glyphtrace-gmm";
    j["version"] = 1;
    j["k"] = model.k();
    nlohmann::json comps = nlohmann::json::array();
    for (const GaussianComponent& c : model.components) {
        comps.push_back({{"weight", c.weight},
                         {"mean", {c.mean.x, c.mean.y}},
                         {"covariance",
                          {{c.covariance(0, 0), c.covariance(0, 1)},
                           {c.covariance(1, 0), c.covariance(1, 1)}}}});
    }
    j["components"] = std::move(comps);
    out << j.dump(2) << '\n';
    if (!out.good()) throw DataError("failed to write mixture model");
}

GmmModel load_gmm(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid mixture model file: ") + e.what());
    }
    if (j.value("format", "") != "glyphtrace-gmm" || j.value("version", 0) != 1) {
        throw DataError("unrecognized mixture model format");
    }
    GmmModel model;
    try {
        for (const auto& c : j.at("components")) {
            GaussianComponent comp;
            comp.weight = c.at("weight").get<double>();
            comp.mean = {c.at("mean").at(0).get<double>(), c.at("mean").at(1).get<double>()};
            const auto& cov = c.at("covariance");
            comp.covariance << cov.at(0).at(0).get<double>(), cov.at(0).at(1).get<double>(),
                cov.at(1).at(0).get<double>(), cov.at(1).at(1).get<double>();
            model.components.push_back(comp);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid mixture model file: ") + e.what());
    }
    if (model.components.empty()) throw DataError("mixture model has no components");
    if (static_cast<int>(model.components.size()) != j.value("k", -1)) {
        throw DataError("mixture model component count does not match header");
    }
    double weight_sum = 0.0;
    for (const GaussianComponent& c : model.components) {
        if (!(c.weight > 0.0) || !is_finite(c.mean) || !c.covariance.allFinite()) {
            throw DataError("mixture model contains invalid component values");
        }
        if (std::abs(c.covariance(0, 1) - c.covariance(1, 0)) >
            1e-9 * (1.0 + std::abs(c.covariance(0, 1)))) {
            throw DataError("mixture model covariance is not symmetric");
        }
        weight_sum += c.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        throw DataError("mixture model weights do not sum to 1");
    }
    return model;
}

}  // namespace glyphtrace
