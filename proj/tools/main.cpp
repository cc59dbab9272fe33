// SPDX-License-Identifier: BSD-3-Clause
//
// glyphtrace: turns recorded robot trajectories into vector art. Subcommands
// cover the full pipeline: demo data generation, mixture-model curve
// generalization, pair-dataset construction, network training and letter
// generation, and 3D path simplification.

#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/version.hpp"
#include "commands.hpp"

using namespace glyphtrace;
using namespace glyphtrace::cli;

int main(int argc, char** argv) {
    CLI::App app{"glyphtrace: vector art from robot trajectories"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--out-dir", common.out_dir, "Directory for all outputs")
        ->capture_default_str();
    app.add_option("--seed", common.seed, "Master seed for all random choices")
        ->capture_default_str();
    app.add_flag("--quiet", common.quiet, "Suppress progress output");

    std::function<int()> run;

    auto* demo = app.add_subcommand("demo", "Generate a seeded synthetic dataset");
    DemoArgs demo_args;
    demo->add_option("--letters", demo_args.letters, "Number of letter trajectories")
        ->capture_default_str();
    demo->callback([&] {
        demo_args.common = common;
        run = [&demo_args] { return cmd_demo(demo_args); };
    });

    auto* generalize =
        app.add_subcommand("generalize", "Generalize letter demonstrations into one curve");
    GeneralizeArgs gen_args;
    generalize->add_option("--in", gen_args.in_dir, "Directory of letter coordinate files")
        ->required();
    generalize->add_option("--k", gen_args.k, "Mixture components")->capture_default_str();
    generalize->add_option("--out", gen_args.model_out, "Mixture model output")
        ->capture_default_str();
    generalize->add_option("--curve", gen_args.curve_out, "Generalized curve output")
        ->capture_default_str();
    generalize->add_option("--svg", gen_args.svg_out, "Vectorized curve SVG")
        ->capture_default_str();
    generalize->callback([&] {
        gen_args.common = common;
        run = [&gen_args] { return cmd_generalize(gen_args); };
    });

    auto* pairs = app.add_subcommand("pairs", "Build the combinatorial pair dataset");
    PairsArgs pairs_args;
    pairs->add_option("--in", pairs_args.in_dir, "Directory of letter coordinate files")
        ->required();
    pairs->add_option("--m", pairs_args.m, "Common resample length")->capture_default_str();
    pairs->add_option("--out", pairs_args.out, "Pair dataset output")->capture_default_str();
    pairs->callback([&] {
        pairs_args.common = common;
        run = [&pairs_args] { return cmd_pairs(pairs_args); };
    });

    auto* train = app.add_subcommand("train", "Train the letter network and generate the test output");
    TrainArgs train_args;
    auto* pairs_opt = train->add_option("--pairs", train_args.pairs_file, "Pair dataset file");
    auto* in_opt = train->add_option("--in", train_args.in_dir, "Directory of letter coordinate files");
    pairs_opt->excludes(in_opt);
    train->add_option("--m", train_args.m, "Common resample length (with --in)")
        ->capture_default_str();
    train->add_option("--lr", train_args.learning_rate, "Learning rate")->capture_default_str();
    train->add_option("--iters", train_args.iterations, "SGD iterations")->capture_default_str();
    train->add_option("--out", train_args.model_out, "Network model output")
        ->capture_default_str();
    train->add_option("--report", train_args.report_out, "Cost trace CSV output")
        ->capture_default_str();
    train->add_option("--gen-out", train_args.generated_out, "Generated test letter output")
        ->capture_default_str();
    train->add_option("--gen-svg", train_args.generated_svg, "Generated test letter SVG")
        ->capture_default_str();
    train->callback([&] {
        if (train_args.pairs_file.empty() && train_args.in_dir.empty()) {
            throw CLI::RequiredError("--pairs or --in");
        }
        train_args.common = common;
        run = [&train_args] { return cmd_train(train_args); };
    });

    auto* generate = app.add_subcommand("generate", "Apply a trained network to a letter");
    GenerateArgs generate_args;
    generate->add_option("--model", generate_args.model_file, "Network model file")->required();
    generate->add_option("--in", generate_args.in_file, "Letter coordinate file")->required();
    generate->add_option("--m", generate_args.m, "Resample length before generation")
        ->capture_default_str();
    generate->add_option("--out", generate_args.out, "Generated coordinate output")
        ->capture_default_str();
    generate->add_option("--svg", generate_args.svg_out, "Dotted letter SVG")
        ->capture_default_str();
    generate->add_flag("--extrude", generate_args.extrude, "Extrude the output randomly along z");
    generate->add_option("--zlo", generate_args.z_low, "Extrusion lower bound")
        ->capture_default_str();
    generate->add_option("--zhi", generate_args.z_high, "Extrusion upper bound")
        ->capture_default_str();
    generate->callback([&] {
        generate_args.common = common;
        run = [&generate_args] { return cmd_generate(generate_args); };
    });

    auto* biopsy = app.add_subcommand("biopsy", "Interpolate, project, and simplify a 3D path");
    BiopsyArgs biopsy_args;
    biopsy->add_option("--in", biopsy_args.in_file, "3D coordinate file")->required();
    biopsy->add_option("--plane", biopsy_args.plane, "Projection plane: fit, xy, xz, yz")
        ->check(CLI::IsMember({"fit", "xy", "xz", "yz"}))
        ->capture_default_str();
    biopsy->add_option("--epsilon", biopsy_args.epsilon,
                       "Simplification tolerance, or 'auto' for 1% of the diagonal")
        ->capture_default_str();
    biopsy->add_option("--samples", biopsy_args.samples, "Spline sample count")
        ->capture_default_str();
    biopsy->add_option("--out", biopsy_args.out, "Simplified coordinate output")
        ->capture_default_str();
    biopsy->add_option("--svg", biopsy_args.svg_out, "Three-stage SVG output")
        ->capture_default_str();
    biopsy->callback([&] {
        biopsy_args.common = common;
        run = [&biopsy_args] { return cmd_biopsy(biopsy_args); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run();
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
