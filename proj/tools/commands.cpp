// SPDX-License-Identifier: BSD-3-Clause
#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <vector>

#include "glyphtrace/bezier.hpp"
#include "glyphtrace/demo_data.hpp"
#include "glyphtrace/errors.hpp"
#include "glyphtrace/gmm.hpp"
#include "glyphtrace/mlp.hpp"
#include "glyphtrace/projection.hpp"
#include "glyphtrace/simplify.hpp"
#include "glyphtrace/spline.hpp"
#include "glyphtrace/svg.hpp"
#include "glyphtrace/trajectory.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;

namespace glyphtrace::cli {

namespace {

void info(const CommonArgs& common, const std::string& msg) {
    if (!common.quiet) std::cout << msg << '\n';
}

// All outputs stay inside out_dir: relative names only, no parent escapes.
fs::path resolve_output(const CommonArgs& common, const std::string& name) {
    const fs::path rel(name);
    if (rel.is_absolute()) throw DataError("output path must be relative: " + name);
    for (const auto& part : rel) {
        if (part == "..") throw DataError("output path may not contain '..': " + name);
    }
    const fs::path full = common.out_dir / rel;
    fs::create_directories(full.parent_path());
    return full;
}

void write_file(const fs::path& file, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw DataError("cannot write " + file.string());
    writer(out);
    if (!out.good()) throw DataError("failed while writing " + file.string());
}

template <typename PointT>
BasicTrajectory<PointT> load_trajectory(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    try {
        BasicTrajectory<PointT> t = parse_trajectory<PointT>(in);
        t.label = file.stem().string();
        return t;
    } catch (const DataError& e) {
        throw DataError(file.string() + ": " + e.what());
    }
}

std::vector<fs::path> list_coordinate_files(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

BoundingBox pad_box(BoundingBox box, double margin) {
    box.min.x -= margin;
    box.min.y -= margin;
    box.max.x += margin;
    box.max.y += margin;
    return box;
}

// Scale-free styling: stroke and dots sized off the drawing's diagonal.
double diag_or_unit(const Trajectory2& t) {
    const double d = bounding_box(t).diagonal();
    return d > 0.0 ? d : 1.0;
}

Trajectory2 shifted(Trajectory2 t, double dx) {
    for (Point2& p : t.points) p.x += dx;
    return t;
}

}  // namespace

int cmd_demo(const DemoArgs& args) {
    const std::vector<Trajectory2> letters = demo_letter_set(args.common.seed, args.letters);
    const Trajectory3 biopsy = demo_biopsy_path(args.common.seed + 1);

    RunManifest manifest;
    manifest.subcommand = "demo";
    manifest.parameters = {{"seed", args.common.seed}, {"letters", args.letters}};

    for (std::size_t i = 0; i < letters.size(); ++i) {
        char name[48];
        std::snprintf(name, sizeof name, "letters/letter_%02zu.csv", i + 1);
        const fs::path file = resolve_output(args.common, name);
        write_file(file, [&](std::ostream& out) { write_trajectory(letters[i], out); });
        manifest.outputs.push_back(name);
    }
    const fs::path biopsy_file = resolve_output(args.common, "biopsy_3d.csv");
    write_file(biopsy_file, [&](std::ostream& out) { write_trajectory(biopsy, out); });
    manifest.outputs.push_back("biopsy_3d.csv");

    manifest.write(resolve_output(args.common, "demo.manifest.json"));
    info(args.common, "wrote " + std::to_string(letters.size()) + " letters and 1 biopsy path to " +
                          args.common.out_dir.string());
    return 0;
}

int cmd_generalize(const GeneralizeArgs& args) {
    const std::vector<fs::path> files = list_coordinate_files(args.in_dir);
    if (files.empty()) throw DataError("no trajectories found in " + args.in_dir.string());

    RunManifest manifest;
    manifest.subcommand = "generalize";
    manifest.parameters = {{"in", args.in_dir.filename().string()},
                           {"k", args.k},
                           {"seed", args.common.seed},
                           {"model", args.model_out},
                           {"curve", args.curve_out},
                           {"svg", args.svg_out}};

    std::vector<Trajectory2> demos;
    demos.reserve(files.size());
    for (const fs::path& f : files) {
        demos.push_back(load_trajectory<Point2>(f));
        manifest.add_input(f);
    }

    const GeneralizeResult result = generalize_letter_full(demos, args.k, args.common.seed);
    info(args.common, "fit " + std::to_string(args.k) + " components over " +
                          std::to_string(demos.size()) + " demonstrations in " +
                          std::to_string(result.report.iterations_run) + " iterations" +
                          (result.report.converged ? "" : " (not converged)"));

    write_file(resolve_output(args.common, args.model_out),
               [&](std::ostream& out) { save_gmm(result.model, out); });
    write_file(resolve_output(args.common, args.curve_out),
               [&](std::ostream& out) { write_trajectory(result.curve, out); });

    const double diag = diag_or_unit(result.curve);
    VectorPath path = fit_bezier(result.curve, default_fit_tolerance(result.curve));
    path.style.stroke_width = 0.01 * diag;
    const BoundingBox canvas = pad_box(bounding_box(result.curve), 0.05 * diag);
    write_file(resolve_output(args.common, args.svg_out),
               [&](std::ostream& out) { export_svg({path}, canvas, out); });

    manifest.outputs = {args.model_out, args.curve_out, args.svg_out};
    manifest.write(resolve_output(args.common, "generalize.manifest.json"));
    return 0;
}

int cmd_pairs(const PairsArgs& args) {
    const std::vector<fs::path> files = list_coordinate_files(args.in_dir);
    if (files.empty()) throw DataError("no trajectories found in " + args.in_dir.string());

    RunManifest manifest;
    manifest.subcommand = "pairs";
    manifest.parameters = {{"in", args.in_dir.filename().string()},
                           {"m", args.m},
                           {"out", args.out}};

    std::vector<Trajectory2> letters;
    letters.reserve(files.size());
    for (const fs::path& f : files) {
        letters.push_back(load_trajectory<Point2>(f));
        manifest.add_input(f);
    }

    const PairDataset dataset = build_pairs(letters, args.m);
    write_file(resolve_output(args.common, args.out),
               [&](std::ostream& out) { save_pairs(dataset, out); });
    info(args.common, "built " + std::to_string(dataset.pairs.size()) + " pairs from " +
                          std::to_string(letters.size()) + " letters");

    manifest.outputs = {args.out};
    manifest.write(resolve_output(args.common, "pairs.manifest.json"));
    return 0;
}

int cmd_train(const TrainArgs& args) {
    RunManifest manifest;
    manifest.subcommand = "train";
    manifest.parameters = {{"m", args.m},
                           {"lr", args.learning_rate},
                           {"iters", args.iterations},
                           {"seed", args.common.seed},
                           {"model", args.model_out},
                           {"report", args.report_out}};

    PairDataset dataset;
    if (!args.pairs_file.empty()) {
        std::ifstream in(args.pairs_file);
        if (!in) throw DataError("cannot open " + args.pairs_file.string());
        dataset = load_pairs(in);
        manifest.add_input(args.pairs_file);
        manifest.parameters["pairs"] = args.pairs_file.filename().string();
    } else {
        const std::vector<fs::path> files = list_coordinate_files(args.in_dir);
        if (files.empty()) throw DataError("no trajectories found in " + args.in_dir.string());
        std::vector<Trajectory2> letters;
        for (const fs::path& f : files) {
            letters.push_back(load_trajectory<Point2>(f));
            manifest.add_input(f);
        }
        dataset = build_pairs(letters, args.m);
        manifest.parameters["in"] = args.in_dir.filename().string();
    }

    // Derived seeds keep the three random stages independent: seed for the
    // weight init, seed+1 for the train/test split, seed+2 for SGD sampling.
    const auto [train_split, test_split] = split_train_test(dataset, args.common.seed + 1);
    const MlpModel initial = init_mlp(args.common.seed);

    TrainConfig cfg;
    cfg.learning_rate = args.learning_rate;
    cfg.iterations = args.iterations;
    cfg.seed = args.common.seed + 2;
    const auto [model, report] = train(initial, train_split, cfg);

    info(args.common, "trained on " + std::to_string(train_split.pairs.size()) + " pairs, cost " +
                          std::to_string(report.cost_trace.front()) + " -> " +
                          std::to_string(report.final_cost));

    write_file(resolve_output(args.common, args.model_out),
               [&](std::ostream& out) { save_mlp(model, out); });
    write_file(resolve_output(args.common, args.report_out), [&](std::ostream& out) {
        out << "iteration,cost\n";
        char buf[64];
        for (std::size_t i = 0; i < report.cost_trace.size(); ++i) {
            const bool last = i + 1 == report.cost_trace.size();
            const long iteration = last ? args.iterations : static_cast<long>(i) * 100;
            std::snprintf(buf, sizeof buf, "%ld,%.17g\n", iteration, report.cost_trace[i]);
            out << buf;
        }
    });

    const TrajectoryPair& test_pair = test_split.pairs.front();
    const Trajectory2 generated = generate_letter(model, test_pair.input);
    write_file(resolve_output(args.common, args.generated_out),
               [&](std::ostream& out) { write_trajectory(generated, out); });

    const double diag = diag_or_unit(generated);
    const double radius = std::max(0.015 * diag, 1e-3);
    const VectorPath dots = to_dotted(generated, radius);
    const BoundingBox canvas = pad_box(bounding_box(generated), 0.05 * diag + radius);
    write_file(resolve_output(args.common, args.generated_svg),
               [&](std::ostream& out) { export_svg({dots}, canvas, out); });

    manifest.parameters["test_pair"] = {test_pair.input_index, test_pair.output_index};
    manifest.outputs = {args.model_out, args.report_out, args.generated_out, args.generated_svg};
    manifest.write(resolve_output(args.common, "train.manifest.json"));
    return 0;
}

int cmd_generate(const GenerateArgs& args) {
    std::ifstream model_in(args.model_file);
    if (!model_in) throw DataError("cannot open " + args.model_file.string());
    const MlpModel model = load_mlp(model_in);

    const Trajectory2 letter = load_trajectory<Point2>(args.in_file);
    const Trajectory2 resampled = resample_by_arclength(letter, args.m);
    const Trajectory2 generated = generate_letter(model, resampled);

    RunManifest manifest;
    manifest.subcommand = "generate";
    manifest.parameters = {{"model", args.model_file.filename().string()},
                           {"in", args.in_file.filename().string()},
                           {"m", args.m},
                           {"seed", args.common.seed},
                           {"out", args.out},
                           {"svg", args.svg_out},
                           {"extrude", args.extrude}};
    manifest.add_input(args.model_file);
    manifest.add_input(args.in_file);

    if (args.extrude) {
        manifest.parameters["zlo"] = args.z_low;
        manifest.parameters["zhi"] = args.z_high;
        const Trajectory3 extruded = extrude_z(generated, args.common.seed, args.z_low, args.z_high);
        write_file(resolve_output(args.common, args.out),
                   [&](std::ostream& out) { write_trajectory(extruded, out); });
    } else {
        write_file(resolve_output(args.common, args.out),
                   [&](std::ostream& out) { write_trajectory(generated, out); });
    }

    const double diag = diag_or_unit(generated);
    const double radius = std::max(0.015 * diag, 1e-3);
    const VectorPath dots = to_dotted(generated, radius);
    const BoundingBox canvas = pad_box(bounding_box(generated), 0.05 * diag + radius);
    write_file(resolve_output(args.common, args.svg_out),
               [&](std::ostream& out) { export_svg({dots}, canvas, out); });

    manifest.outputs = {args.out, args.svg_out};
    manifest.write(resolve_output(args.common, "generate.manifest.json"));
    info(args.common, "generated " + std::to_string(generated.points.size()) + " points");
    return 0;
}

int cmd_biopsy(const BiopsyArgs& args) {
    const Trajectory3 recording = load_trajectory<Point3>(args.in_file);
    const SplineCurve spline = interpolate_spline(recording);
    const Trajectory3 sampled = sample_curve(spline, args.samples);

    ProjectionPlane plane = ProjectionPlane::fitted;
    if (args.plane == "xy") plane = ProjectionPlane::xy;
    else if (args.plane == "xz") plane = ProjectionPlane::xz;
    else if (args.plane == "yz") plane = ProjectionPlane::yz;
    else if (args.plane != "fit") throw DataError("unknown plane: " + args.plane);

    const Trajectory2 projected = project(sampled, plane);

    double epsilon = 0.0;
    if (args.epsilon == "auto") {
        epsilon = 0.01 * bounding_box(projected).diagonal();
    } else {
        try {
            std::size_t used = 0;
            epsilon = std::stod(args.epsilon, &used);
            if (used != args.epsilon.size()) throw std::invalid_argument(args.epsilon);
        } catch (const std::exception&) {
            throw DataError("invalid epsilon: " + args.epsilon);
        }
    }
    const Trajectory2 simplified = simplify_rdp(projected, epsilon);

    RunManifest manifest;
    manifest.subcommand = "biopsy";
    manifest.parameters = {{"in", args.in_file.filename().string()},
                           {"plane", args.plane},
                           {"epsilon", args.epsilon},
                           {"samples", args.samples},
                           {"out", args.out},
                           {"svg", args.svg_out}};
    manifest.add_input(args.in_file);

    write_file(resolve_output(args.common, "biopsy_sampled.csv"),
               [&](std::ostream& out) { write_trajectory(sampled, out); });
    write_file(resolve_output(args.common, "biopsy_projected.csv"),
               [&](std::ostream& out) { write_trajectory(projected, out); });
    write_file(resolve_output(args.common, args.out),
               [&](std::ostream& out) { write_trajectory(simplified, out); });

    // Three stages side by side: interpolated curve, its smooth vector fit,
    // and the simplified polyline.
    const BoundingBox stage_box = bounding_box(projected);
    const double width = std::max(stage_box.extent().x, 1e-6);
    const double step = 1.25 * width;
    const double diag = diag_or_unit(projected);

    VectorPath stage_a = polyline_path(projected);
    VectorPath stage_b = fit_bezier(shifted(projected, step), default_fit_tolerance(projected));
    VectorPath stage_c = polyline_path(shifted(simplified, 2.0 * step));
    stage_a.style.stroke_width = stage_b.style.stroke_width = stage_c.style.stroke_width =
        0.01 * diag;

    BoundingBox canvas = stage_box;
    canvas.max.x += 2.0 * step;
    canvas = pad_box(canvas, 0.05 * diag);
    write_file(resolve_output(args.common, args.svg_out), [&](std::ostream& out) {
        export_svg({stage_a, stage_b, stage_c}, canvas, out);
    });

    info(args.common, "simplified " + std::to_string(projected.points.size()) + " points to " +
                          std::to_string(simplified.points.size()) + " (epsilon " +
                          std::to_string(epsilon) + ")");

    manifest.outputs = {"biopsy_sampled.csv", "biopsy_projected.csv", args.out, args.svg_out};
    manifest.write(resolve_output(args.common, "biopsy.manifest.json"));
    return 0;
}

}  // namespace glyphtrace::cli
