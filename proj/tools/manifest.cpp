// SPDX-License-Identifier: BSD-3-Clause
#include "manifest.hpp"

#include <cstdio>
#include <fstream>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/version.hpp"

namespace glyphtrace::cli {

std::string file_digest(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw DataError("cannot open " + file.string());

    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
    }
    char out[32];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

void RunManifest::add_input(const std::filesystem::path& file) {
    inputs.emplace_back(file.filename().string(), file_digest(file));
}

void RunManifest::write(const std::filesystem::path& file) const {
    nlohmann::json j;
    j["format"] = "glyphtrace-manifest";
    j["version"] = 1;
    j["tool_version"] = kVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    nlohmann::json in_array = nlohmann::json::array();
    for (const auto& [name, digest] : inputs) {
        in_array.push_back({{"file", name}, {"fnv1a64", digest}});
    }
    j["inputs"] = std::move(in_array);
    j["outputs"] = outputs;

    std::ofstream out(file);
    if (!out) throw DataError("cannot write " + file.string());
    out << j.dump(2) << '\n';
    if (!out.good()) throw DataError("failed to write " + file.string());
}

}  // namespace glyphtrace::cli
