// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/svg.hpp"

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "glyphtrace/bezier.hpp"
#include "glyphtrace/errors.hpp"
#include "glyphtrace/rng.hpp"
#include "test_util.hpp"

using namespace glyphtrace;

namespace {

VectorPath random_path(Rng& rng) {
    VectorPath path;
    const int subpaths = rng.uniform_int(1, 3);
    for (int s = 0; s < subpaths; ++s) {
        Subpath sub;
        Point2 cursor{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const int segments = rng.uniform_int(1, 6);
        for (int i = 0; i < segments; ++i) {
            CubicBezier seg;
            seg.p0 = cursor;
            seg.p1 = {cursor.x + rng.uniform(-1, 1), cursor.y + rng.uniform(-1, 1)};
            seg.p2 = {cursor.x + rng.uniform(-1, 1), cursor.y + rng.uniform(-1, 1)};
            cursor = {cursor.x + rng.uniform(-1, 1), cursor.y + rng.uniform(-1, 1)};
            seg.p3 = cursor;
            sub.segments.push_back(seg);
        }
        sub.closed = rng.uniform01() < 0.3;
        path.subpaths.push_back(std::move(sub));
    }
    path.style.dotted = rng.uniform01() < 0.3;
    path.style.stroke_width = rng.uniform(0.001, 0.1);
    return path;
}

std::string export_to_string(const std::vector<VectorPath>& paths, const BoundingBox& canvas) {
    std::ostringstream out;
    export_svg(paths, canvas, out);
    return out.str();
}

std::vector<std::string> path_data_attributes(const std::string& svg) {
    std::vector<std::string> result;
    std::size_t pos = 0;
    while ((pos = svg.find("d=\"", pos)) != std::string::npos) {
        pos += 3;
        const std::size_t end = svg.find('"', pos);
        result.push_back(svg.substr(pos, end - pos));
        pos = end;
    }
    return result;
}

}  // namespace

TEST(ExportSvg, StructureOfASingleSegment) {
    Trajectory2 t;
    t.points = {{0, 0}, {1, 1}};
    const VectorPath path = fit_bezier(t, 0.01);
    const BoundingBox canvas{{0, 0}, {1, 1}};
    const std::string svg = export_to_string({path}, canvas);

    const auto info = testutil::parse_xml(svg);
    ASSERT_TRUE(info.has_value());
    EXPECT_EQ(info->root, "svg");
    EXPECT_EQ(info->view_box, "0.0000 0.0000 1.0000 1.0000");
    EXPECT_NE(svg.find("<path d=\"M "), std::string::npos);
    EXPECT_NE(svg.find(" C "), std::string::npos);
    EXPECT_NE(svg.find("stroke=\"black\""), std::string::npos);
}

TEST(ExportSvg, DottedPathsAreFilled) {
    Trajectory2 t;
    t.points = {{0.5, 0.5}};
    const VectorPath dots = to_dotted(t, 0.1);
    const std::string svg = export_to_string({dots}, {{0, 0}, {1, 1}});
    EXPECT_NE(svg.find("fill=\"black\""), std::string::npos);
    EXPECT_NE(svg.find("stroke=\"none\""), std::string::npos);
    EXPECT_NE(svg.find(" Z"), std::string::npos);
}

TEST(ExportSvg, WellFormedUnderFuzz) {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<VectorPath> paths;
        const int n = rng.uniform_int(1, 4);
        for (int i = 0; i < n; ++i) paths.push_back(random_path(rng));
        const BoundingBox canvas{{rng.uniform(-5, 0), rng.uniform(-5, 0)},
                                 {rng.uniform(1, 5), rng.uniform(1, 5)}};
        const std::string svg = export_to_string(paths, canvas);
        const auto info = testutil::parse_xml(svg);
        ASSERT_TRUE(info.has_value()) << "trial " << trial;
        EXPECT_EQ(info->root, "svg");
        EXPECT_FALSE(info->view_box.empty());
    }
}

TEST(ExportSvg, PathDataRoundTripsWithinQuantization) {
    Rng rng(5);
    VectorPath path = random_path(rng);
    path.style.dotted = false;
    const BoundingBox canvas{{-4, -4}, {4, 4}};
    const std::string svg = export_to_string({path}, canvas);

    const auto data = path_data_attributes(svg);
    ASSERT_EQ(data.size(), 1u);
    const auto parsed = testutil::parse_path_data(data[0]);
    ASSERT_TRUE(parsed.has_value());
    ASSERT_EQ(parsed->size(), path.subpaths.size());

    const double flip_sum = canvas.min.y + canvas.max.y;
    for (std::size_t s = 0; s < parsed->size(); ++s) {
        const auto& sub = path.subpaths[s];
        const auto& controls = (*parsed)[s].controls;
        ASSERT_EQ(controls.size(), 3 * sub.segments.size() + 1);
        for (std::size_t i = 0; i < sub.segments.size(); ++i) {
            const Point2 expected[4] = {sub.segments[i].p0, sub.segments[i].p1,
                                        sub.segments[i].p2, sub.segments[i].p3};
            for (int k = (i == 0 ? 0 : 1); k < 4; ++k) {
                const Point2 got = controls[3 * i + static_cast<std::size_t>(k)];
                EXPECT_NEAR(got.x, expected[k].x, 5.1e-5);
                EXPECT_NEAR(flip_sum - got.y, expected[k].y, 5.1e-5);
            }
        }
    }
}

TEST(ExportSvg, YFlipIsAnInvolutionByteStable) {
    Rng rng(11);
    VectorPath path = random_path(rng);
    path.style.dotted = false;
    path.style.stroke_width = 0.02;
    const BoundingBox canvas{{-4, -4}, {4, 4}};
    const std::string first = export_to_string({path}, canvas);

    // Import: parse the emitted control points and undo the y flip.
    const auto data = path_data_attributes(first);
    ASSERT_EQ(data.size(), 1u);
    const auto parsed = testutil::parse_path_data(data[0]);
    ASSERT_TRUE(parsed.has_value());

    const double flip_sum = canvas.min.y + canvas.max.y;
    VectorPath reimported;
    reimported.style = path.style;
    for (const auto& sub : *parsed) {
        Subpath out_sub;
        out_sub.closed = sub.closed;
        for (std::size_t i = 0; i + 3 < sub.controls.size(); i += 3) {
            auto unflip = [&](Point2 p) { return Point2{p.x, flip_sum - p.y}; };
            out_sub.segments.push_back({unflip(sub.controls[i]), unflip(sub.controls[i + 1]),
                                        unflip(sub.controls[i + 2]), unflip(sub.controls[i + 3])});
        }
        reimported.subpaths.push_back(std::move(out_sub));
    }

    const std::string second = export_to_string({reimported}, canvas);
    EXPECT_EQ(first, second);
}

TEST(ExportSvg, EmptyPathListThrows) {
    std::ostringstream out;
    EXPECT_THROW(export_svg({}, {{0, 0}, {1, 1}}, out), DataError);
}
