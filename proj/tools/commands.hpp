// SPDX-License-Identifier: BSD-3-Clause
// Copyright (c) 2026 Glyphtrace Authors
//
// CLI subcommand implementations. Each command reads coordinate files,
// drives the core pipeline, and writes its outputs plus a run manifest
// inside the chosen output directory. Errors surface as exceptions; the
// entry point maps them to exit codes.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace glyphtrace::cli {

struct CommonArgs {
    std::filesystem::path out_dir = ".";
    std::uint64_t seed = 0;
    bool quiet = false;
};

struct DemoArgs {
    CommonArgs common;
    int letters = 9;
};

struct GeneralizeArgs {
    CommonArgs common;
    std::filesystem::path in_dir;
    int k = 10;
    std::string model_out = "model.gmm";
    std::string curve_out = "curve.csv";
    std::string svg_out = "curve.svg";
};

struct PairsArgs {
    CommonArgs common;
    std::filesystem::path in_dir;
    std::size_t m = 64;
    std::string out = "pairs.json";
};

struct TrainArgs {
    CommonArgs common;
    std::filesystem::path pairs_file;
    std::filesystem::path in_dir;
    std::size_t m = 64;
    double learning_rate = 0.0001;
    int iterations = 10000;
    std::string model_out = "model.mlp";
    std::string report_out = "cost.csv";
    std::string generated_out = "generated.csv";
    std::string generated_svg = "generated.svg";
};

struct GenerateArgs {
    CommonArgs common;
    std::filesystem::path model_file;
    std::filesystem::path in_file;
    std::size_t m = 64;
    std::string out = "gen.csv";
    std::string svg_out = "gen.svg";
    bool extrude = false;
    double z_low = -0.1;
    double z_high = 0.1;
};

struct BiopsyArgs {
    CommonArgs common;
    std::filesystem::path in_file;
    std::string plane = "fit";
    std::string epsilon = "auto";
    std::size_t samples = 400;
    std::string out = "simplified.csv";
    std::string svg_out = "biopsy.svg";
};

int cmd_demo(const DemoArgs& args);
int cmd_generalize(const GeneralizeArgs& args);
int cmd_pairs(const PairsArgs& args);
int cmd_train(const TrainArgs& args);
int cmd_generate(const GenerateArgs& args);
int cmd_biopsy(const BiopsyArgs& args);

}  // namespace glyphtrace::cli
