// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Seeded random source with portable draw semantics. std::mt19937_64 is
// bit-exact across implementations; the distribution shaping is done here
// instead of through std:: distributions, whose output is
// implementation-defined.

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>

namespace glyphtrace {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    [[nodiscard]] double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi). Returns lo exactly when lo == hi.
    [[nodiscard]] double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform index in [0, n). Unbiased via rejection.
    [[nodiscard]] std::size_t uniform_index(std::size_t n) {
        assert(n > 0);
        const std::uint64_t bound = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = engine_();
        while (r >= limit) r = engine_();
        return static_cast<std::size_t>(r % bound);
    }

    /// Uniform integer in [lo, hi] inclusive.
    [[nodiscard]] int uniform_int(int lo, int hi) {
        assert(hi >= lo);
        return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi - lo) + 1));
    }

    /// Standard normal via Box-Muller.
    [[nodiscard]] double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace glyphtrace
