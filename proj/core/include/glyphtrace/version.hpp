// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors

#pragma once

namespace glyphtrace {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace glyphtrace
