// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// Run manifests: a sidecar record of every invocation (parameters, seeds,
// input digests, tool version) sufficient to reproduce its outputs
// bit-identically.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace glyphtrace::cli {

/// FNV-1a 64-bit digest of a file's bytes, as a hex string.
[[nodiscard]] std::string file_digest(const std::filesystem::path& file);

struct RunManifest {
    std::string subcommand;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::pair<std::string, std::string>> inputs;  // (name, digest)
    std::vector<std::string> outputs;

    void add_input(const std::filesystem::path& file);
    void write(const std::filesystem::path& file) const;
};

}  // namespace glyphtrace::cli
