// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/demo_data.hpp"

#include <cmath>
#include <cstdio>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/rng.hpp"

namespace glyphtrace {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::vector<Trajectory2> demo_letter_set(std::uint64_t seed, int count) {
    if (count < 1) throw DataError("letter count must be positive");

    std::vector<Trajectory2> letters;
    letters.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);

    for (int letter = 0; letter < count; ++letter) {
        const int total_points = rng.uniform_int(80, 200);
        const int dwell = rng.uniform_int(6, 12);
        const int arc_points = total_points - dwell;

        // An open arc spanning most of a circle reads as a "C"; the gap
        // faces right. Per-writer variation: size, placement, vertical
        // stretch, and a low-frequency radial wobble.
        const double theta_start = (50.0 + rng.uniform(-8.0, 8.0)) * kPi / 180.0;
        const double theta_end = (310.0 + rng.uniform(-8.0, 8.0)) * kPi / 180.0;
        const double radius = 0.55 + rng.uniform(-0.1, 0.1);
        const double cx = rng.uniform(-0.15, 0.15);
        const double cy = rng.uniform(-0.15, 0.15);
        const double stretch = 1.0 + rng.uniform(-0.15, 0.15);

        double amp[3];
        double phase[3];
        for (int h = 0; h < 3; ++h) {
            amp[h] = rng.uniform(0.0, 0.02);
            phase[h] = rng.uniform(0.0, 2.0 * kPi);
        }

        Trajectory2 t;
        char label[32];
        std::snprintf(label, sizeof label, "letter-%02d", letter + 1);
        t.label = label;
        t.points.reserve(static_cast<std::size_t>(total_points));

        for (int i = 0; i < arc_points; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(arc_points - 1);
            const double theta = theta_start + s * (theta_end - theta_start);
            double r = radius;
            for (int h = 0; h < 3; ++h) {
                r += amp[h] * std::sin(static_cast<double>(h + 1) * theta + phase[h]);
            }
            t.points.push_back({cx + r * std::cos(theta), cy + stretch * r * std::sin(theta)});
        }

        // Leading dwell: the robot sits still before the stroke begins.
        t.points.insert(t.points.begin(), static_cast<std::size_t>(dwell), t.points.front());
        letters.push_back(std::move(t));
    }
    return letters;
}

Trajectory3 demo_biopsy_path(std::uint64_t seed) {
    Rng rng(seed);
    Trajectory3 t;
    t.label = "biopsy";

    const double sweep_radius = 0.35 + rng.uniform(-0.05, 0.05);
    const double sweep_turns = 0.75 + rng.uniform(-0.1, 0.1);
    const double descent = 0.5 + rng.uniform(-0.05, 0.05);
    const double wobble = rng.uniform(0.0, 0.01);
    const double wobble_phase = rng.uniform(0.0, 2.0 * kPi);

    // Localization sweep: a descending partial turn around the entry point.
    const int sweep_points = 60;
    for (int i = 0; i < sweep_points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(sweep_points - 1);
        const double theta = 2.0 * kPi * sweep_turns * s;
        const double r = sweep_radius * (1.0 - 0.3 * s) + wobble * std::sin(5.0 * theta + wobble_phase);
        t.points.push_back({r * std::cos(theta), r * std::sin(theta), 0.8 - descent * s});
    }

    // Insertion: straight plunge from the sweep end toward the target.
    const Point3 start = t.points.back();
    const Point3 target{rng.uniform(-0.03, 0.03), rng.uniform(-0.03, 0.03), -0.2};
    const int insert_points = 40;
    for (int i = 1; i <= insert_points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(insert_points);
        t.points.push_back(lerp(start, target, s));
    }
    return t;
}

}  // namespace glyphtrace
