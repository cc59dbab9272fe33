// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors

#pragma once

#include <stdexcept>
#include <string>

namespace glyphtrace {

// Raised when user-supplied data or parameters are unusable (malformed files,
// degenerate geometry, out-of-range arguments). The CLI maps this to exit
// code 1; any other exception is treated as an internal error (exit code 2).
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glyphtrace
