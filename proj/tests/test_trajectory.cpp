// SPDX-License-Identifier: BSD-3-Clause
#include "glyphtrace/trajectory.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "glyphtrace/errors.hpp"
#include "glyphtrace/rng.hpp"
#include "test_util.hpp"

using namespace glyphtrace;

namespace {

// First column of a real dwell-then-move recording: the pen rests at the
// same spot for nine samples before the stroke starts.
constexpr const char* kDwellColumn =
    "-0.253, 0.341\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n"
    "-0.255, 0.345\n";

Trajectory2 make(std::initializer_list<Point2> pts) {
    Trajectory2 t;
    t.points = pts;
    return t;
}

}  // namespace

TEST(ParseTrajectory, ReadsCommaSeparatedPairs) {
    std::istringstream in("-0.253, 0.341\n-0.255, 0.345\n");
    const Trajectory2 t = parse_trajectory<Point2>(in);
    ASSERT_EQ(t.points.size(), 2u);
    EXPECT_DOUBLE_EQ(t.points[0].x, -0.253);
    EXPECT_DOUBLE_EQ(t.points[0].y, 0.341);
    EXPECT_DOUBLE_EQ(t.sample_rate_hz, 10.0);
}

TEST(ParseTrajectory, RetainsDwellPoints) {
    std::istringstream in(kDwellColumn);
    const Trajectory2 t = parse_trajectory<Point2>(in);
    ASSERT_EQ(t.points.size(), 10u);
    for (std::size_t i = 1; i < 10; ++i) {
        EXPECT_EQ(t.points[i], (Point2{-0.255, 0.345}));
    }
}

TEST(ParseTrajectory, EmptyInputFails) {
    std::istringstream in("");
    EXPECT_THROW(
        {
            try {
                (void)parse_trajectory<Point2>(in);
            } catch (const DataError& e) {
                EXPECT_NE(std::string(e.what()).find("insufficient points"), std::string::npos);
                throw;
            }
        },
        DataError);
}

TEST(ParseTrajectory, MalformedLineReportsLineNumber) {
    std::istringstream in("0.1, 0.2\n0.3, 0.4\n0.5, oops\n");
    try {
        (void)parse_trajectory<Point2>(in);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(ParseTrajectory, SkipsCommentsBlanksAndOneHeader) {
    std::istringstream in("# recorded stroke\nx, y\n\n0.0, 0.0\n1.0, 1.0\n");
    const Trajectory2 t = parse_trajectory<Point2>(in);
    EXPECT_EQ(t.points.size(), 2u);
}

TEST(ParseTrajectory, SecondBadLineIsAnError) {
    std::istringstream in("x, y\nalso bad\n0, 0\n1, 1\n");
    EXPECT_THROW((void)parse_trajectory<Point2>(in), DataError);
}

TEST(ParseTrajectory, RejectsNonFiniteValues) {
    std::istringstream in("inf, 0\n0, 0\n1, 1\n");
    EXPECT_THROW((void)parse_trajectory<Point2>(in), DataError);
}

TEST(ParseTrajectory, ReadsThreeColumns) {
    std::istringstream in("1, 2, 3\n4, 5, 6\n");
    const Trajectory3 t = parse_trajectory<Point3>(in);
    ASSERT_EQ(t.points.size(), 2u);
    EXPECT_EQ(t.points[1], (Point3{4, 5, 6}));
}

TEST(ParseTrajectory, WrongColumnCountIsAnError) {
    std::istringstream in("1, 2\n1, 2, 3\n");
    EXPECT_THROW((void)parse_trajectory<Point2>(in), DataError);
}

TEST(WriteTrajectory, MirrorsInputFormat) {
    std::ostringstream out;
    write_trajectory(make({{0.5, 0.25}, {-0.253, 0.341}}), out);
    EXPECT_EQ(out.str(), "0.500000, 0.250000\n-0.253000, 0.341000\n");
}

TEST(WriteTrajectory, RoundTripsBitIdentically) {
    // Values with at most six fractional digits survive parse -> write ->
    // parse exactly.
    Rng rng(101);
    std::ostringstream source;
    for (int i = 0; i < 200; ++i) {
        const double x = static_cast<double>(rng.uniform_int(-10000000, 10000000)) / 1e6;
        const double y = static_cast<double>(rng.uniform_int(-10000000, 10000000)) / 1e6;
        source << x << ", " << y << "\n";
    }
    std::istringstream first_in(source.str());
    const Trajectory2 first = parse_trajectory<Point2>(first_in);

    std::ostringstream serialized;
    write_trajectory(first, serialized);
    std::istringstream second_in(serialized.str());
    const Trajectory2 second = parse_trajectory<Point2>(second_in);

    ASSERT_EQ(first.points.size(), second.points.size());
    for (std::size_t i = 0; i < first.points.size(); ++i) {
        EXPECT_EQ(first.points[i], second.points[i]) << "at " << i;
    }
}

TEST(Resample, StraightSegmentUniform) {
    const Trajectory2 t = resample_by_arclength(make({{0, 0}, {1, 0}}), 3);
    ASSERT_EQ(t.points.size(), 3u);
    EXPECT_EQ(t.points[0], (Point2{0, 0}));
    EXPECT_EQ(t.points[1], (Point2{0.5, 0}));
    EXPECT_EQ(t.points[2], (Point2{1, 0}));
}

TEST(Resample, TwoPointsKeepsEndpointsOnly) {
    const Trajectory2 t = resample_by_arclength(make({{0, 0}, {0.3, 0.1}, {1, 2}}), 2);
    ASSERT_EQ(t.points.size(), 2u);
    EXPECT_EQ(t.points.front(), (Point2{0, 0}));
    EXPECT_EQ(t.points.back(), (Point2{1, 2}));
}

TEST(Resample, LShapedPolylineHitsArcLengths) {
    // Cumulative arc lengths 0, 1, 2; targets at 0, 0.5, 1.0, 1.5, 2.0.
    const Trajectory2 t = resample_by_arclength(make({{0, 0}, {1, 0}, {1, 1}}), 5);
    ASSERT_EQ(t.points.size(), 5u);
    EXPECT_EQ(t.points[0], (Point2{0, 0}));
    EXPECT_EQ(t.points[1], (Point2{0.5, 0}));
    EXPECT_EQ(t.points[2], (Point2{1, 0}));
    EXPECT_EQ(t.points[3], (Point2{1, 0.5}));
    EXPECT_EQ(t.points[4], (Point2{1, 1}));
}

TEST(Resample, ZeroLengthThrows) {
    EXPECT_THROW((void)resample_by_arclength(make({{1, 1}, {1, 1}, {1, 1}}), 4), DataError);
}

TEST(Resample, DwellPointsCollapseToUniformSpacing) {
    Trajectory2 t = make({{0, 0}});
    for (int i = 0; i < 8; ++i) t.points.push_back({0, 0});  // dwell
    t.points.push_back({1, 0});
    const Trajectory2 r = resample_by_arclength(t, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(r.points[i].x, 0.25 * static_cast<double>(i), 1e-15);
    }
}

TEST(Resample, EndpointsPreservedExactlyForAllM) {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Trajectory2 t = testutil::random_polyline(rng, 12);
        for (std::size_t m : {2u, 3u, 17u, 64u}) {
            const Trajectory2 r = resample_by_arclength(t, m);
            ASSERT_EQ(r.points.size(), m);
            EXPECT_EQ(r.points.front(), t.points.front());
            EXPECT_EQ(r.points.back(), t.points.back());
        }
    }
}

TEST(Resample, NestedRefinementConverges) {
    // Along a nested ladder (each m doubles the interior grid) the worst
    // vertex-to-polyline distance does not grow, and ends up small.
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Trajectory2 t = testutil::random_polyline(rng, 10);
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t m : {3u, 5u, 9u, 17u, 33u, 65u, 129u, 257u, 513u, 1025u}) {
            const Trajectory2 r = resample_by_arclength(t, m);
            double worst = 0.0;
            for (const Point2& p : t.points) {
                worst = std::max(worst, testutil::polyline_distance(p, r.points));
            }
            EXPECT_LE(worst, prev + 1e-12) << "m=" << m << " trial=" << trial;
            prev = worst;
        }
        EXPECT_LT(prev, 1e-2);
    }
}

TEST(BoundingBoxOf, SimpleAndDegenerate) {
    EXPECT_EQ(bounding_box(make({{0, 0}, {1, 2}})),
              (BoundingBox{{0, 0}, {1, 2}}));
    EXPECT_EQ(bounding_box(make({{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}})),
              (BoundingBox{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(BoundingBoxOf, DwellColumnRecording) {
    std::istringstream in(kDwellColumn);
    const BoundingBox box = bounding_box(parse_trajectory<Point2>(in));
    EXPECT_EQ(box.min, (Point2{-0.255, 0.341}));
    EXPECT_EQ(box.max, (Point2{-0.253, 0.345}));
}

TEST(CheckUnitRange, RecordedPointsAreInRange) {
    std::istringstream in(kDwellColumn);
    EXPECT_TRUE(check_unit_range(parse_trajectory<Point2>(in)));
}

TEST(CheckUnitRange, OutOfRangeAndBoundary) {
    EXPECT_FALSE(check_unit_range(make({{1.5, 0}, {0, 0}})));
    EXPECT_TRUE(check_unit_range(make({{-1, 1}, {1, -1}})));
}

TEST(NormalizeToUnit, CentersAndScales) {
    const Trajectory2 t = normalize_to_unit(make({{0, 0}, {2, 0}}));
    EXPECT_EQ(t.points[0], (Point2{-1, 0}));
    EXPECT_EQ(t.points[1], (Point2{1, 0}));
}

TEST(NormalizeToUnit, AlreadyConformingIsUnchanged) {
    const Trajectory2 t = make({{-1, -0.5}, {1, 0.5}});
    const Trajectory2 n = normalize_to_unit(t);
    EXPECT_EQ(n.points[0], t.points[0]);
    EXPECT_EQ(n.points[1], t.points[1]);
}

TEST(NormalizeToUnit, HandComputedAffineMap) {
    // bbox center (11, 12), half extents (1, 2): scale by 1/2.
    const Trajectory2 t = normalize_to_unit(make({{10, 10}, {12, 14}}));
    EXPECT_EQ(t.points[0], (Point2{-0.5, -1}));
    EXPECT_EQ(t.points[1], (Point2{0.5, 1}));
}

TEST(NormalizeToUnit, SinglePointThrows) {
    EXPECT_THROW((void)normalize_to_unit(make({{3, 3}, {3, 3}})), DataError);
}

TEST(NormalizeToUnit, OutputInRangeAndAspectPreserved) {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Trajectory2 t = testutil::random_polyline(rng, 8);
        for (Point2& p : t.points) {
            p.x = p.x * 40.0 + 100.0;
            p.y = p.y * 3.0 - 7.0;
        }
        const Trajectory2 n = normalize_to_unit(t);
        EXPECT_TRUE(check_unit_range(n));

        const Point2 before = bounding_box(t).extent();
        const Point2 after = bounding_box(n).extent();
        ASSERT_GT(before.x, 0.0);
        ASSERT_GT(before.y, 0.0);
        const double ratio_before = before.x / before.y;
        const double ratio_after = after.x / after.y;
        EXPECT_NEAR(ratio_after / ratio_before, 1.0, 1e-12);
    }
}
