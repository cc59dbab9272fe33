// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Seeded synthetic datasets standing in for hand-guided robot recordings:
// a set of C-shaped letter trajectories with per-writer variation and
// leading dwell points, and a 3D path resembling a recorded surgical
// approach-and-insertion motion.

#pragma once

#include <cstdint>
#include <vector>

#include "glyphtrace/trajectory.hpp"

namespace glyphtrace {

/// `count` open-arc letters, each 80 to 200 points sampled at 10 Hz, all
/// coordinates inside [-1, 1]. Every letter starts with at least 5
/// consecutive identical dwell points, imitating the stationary robot at
/// stroke start. Deterministic per seed.
[[nodiscard]] std::vector<Trajectory2> demo_letter_set(std::uint64_t seed, int count = 9);

/// A 3D path with a curved localization sweep followed by a straight
/// insertion; non-collinear, at least 4 distinct points. Deterministic per
/// seed.
[[nodiscard]] Trajectory3 demo_biopsy_path(std::uint64_t seed);

}  // namespace glyphtrace
