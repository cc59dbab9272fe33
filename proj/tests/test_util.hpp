// SPDX-License-Identifier: BSD-3-Clause
//
// Shared test helpers: independent distance oracles, random polyline
// generators, a strict well-formedness checker for the XML subset the SVG
// writer emits, and a parser for its path data.

#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "glyphtrace/bezier.hpp"
#include "glyphtrace/geometry.hpp"
#include "glyphtrace/rng.hpp"
#include "glyphtrace/trajectory.hpp"

namespace testutil {

using glyphtrace::Point2;
using glyphtrace::Point3;

// Independent point-to-segment distance (oracle side; deliberately not the
// library helper).
inline double segment_distance(Point2 p, Point2 a, Point2 b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len2 = abx * abx + aby * aby;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
        t = std::min(1.0, std::max(0.0, t));
    }
    const double dx = p.x - (a.x + t * abx);
    const double dy = p.y - (a.y + t * aby);
    return std::sqrt(dx * dx + dy * dy);
}

// Distance from a point to a polyline, brute force over all edges.
inline double polyline_distance(Point2 p, const std::vector<Point2>& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < poly.size(); ++i) {
        best = std::min(best, segment_distance(p, poly[i - 1], poly[i]));
    }
    return best;
}

inline glyphtrace::Trajectory2 random_polyline(glyphtrace::Rng& rng, int n) {
    glyphtrace::Trajectory2 t;
    Point2 p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    t.points.push_back(p);
    for (int i = 1; i < n; ++i) {
        p.x += rng.uniform(-0.2, 0.2);
        p.y += rng.uniform(-0.2, 0.2);
        t.points.push_back(p);
    }
    return t;
}

// Accurate point-to-cubic distance: coarse grid to localize the minimum,
// then Newton iterations on the derivative of the squared distance.
inline double nearest_on_cubic(const glyphtrace::CubicBezier& b, Point2 p) {
    using glyphtrace::dot;
    using glyphtrace::squared_norm;
    auto d1 = [&](double u) {
        const double w = 1.0 - u;
        return 3.0 * (w * w * (b.p1 - b.p0) + 2.0 * w * u * (b.p2 - b.p1) +
                      u * u * (b.p3 - b.p2));
    };
    auto d2 = [&](double u) {
        const double w = 1.0 - u;
        return 6.0 * (w * (b.p2 - 2.0 * b.p1 + b.p0) + u * (b.p3 - 2.0 * b.p2 + b.p1));
    };

    double best_u = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 256; ++i) {
        const double u = static_cast<double>(i) / 256.0;
        const double d = squared_norm(b.evaluate(u) - p);
        if (d < best) {
            best = d;
            best_u = u;
        }
    }
    double u = best_u;
    for (int iter = 0; iter < 40; ++iter) {
        const Point2 diff = b.evaluate(u) - p;
        const Point2 du = d1(u);
        const double f1 = 2.0 * dot(diff, du);
        const double f2 = 2.0 * (dot(du, du) + dot(diff, d2(u)));
        if (f2 == 0.0) break;
        double next = u - f1 / f2;
        next = next < 0.0 ? 0.0 : next > 1.0 ? 1.0 : next;
        if (std::abs(next - u) < 1e-15) {
            u = next;
            break;
        }
        u = next;
    }
    best = std::min(best, squared_norm(b.evaluate(u) - p));
    return std::sqrt(best);
}

inline double path_distance(const glyphtrace::VectorPath& path, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const glyphtrace::Subpath& sub : path.subpaths) {
        for (const glyphtrace::CubicBezier& seg : sub.segments) {
            best = std::min(best, nearest_on_cubic(seg, p));
        }
    }
    return best;
}

// A smooth random curve: a few seeded harmonics sampled densely.
inline glyphtrace::Trajectory2 random_smooth_curve(glyphtrace::Rng& rng, int n) {
    double ax[3], ay[3], px[3], py[3];
    for (int h = 0; h < 3; ++h) {
        ax[h] = rng.uniform(-0.5, 0.5);
        ay[h] = rng.uniform(-0.5, 0.5);
        px[h] = rng.uniform(0.0, 6.283185307179586);
        py[h] = rng.uniform(0.0, 6.283185307179586);
    }
    glyphtrace::Trajectory2 t;
    for (int i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1) * 6.283185307179586;
        double x = 0.0, y = 0.0;
        for (int h = 0; h < 3; ++h) {
            x += ax[h] * std::sin((h + 1) * s + px[h]);
            y += ay[h] * std::cos((h + 1) * s + py[h]);
        }
        t.points.push_back({x, y});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Minimal XML well-formedness check, strict enough for the documents the SVG
// writer can produce: prolog, balanced tags, quoted attributes, no stray '<'
// or '&' in character data.

struct XmlInfo {
    std::string root;
    std::string view_box;  // value of the root's viewBox attribute, if any
};

inline std::optional<XmlInfo> parse_xml(const std::string& text) {
    XmlInfo info;
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::vector<std::string> stack;
    bool seen_root = false;
    bool done_root = false;

    auto skip_ws = [&](std::size_t& k) {
        while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    };

    // Optional XML declaration.
    skip_ws(i);
    if (text.compare(i, 5, "<?xml") == 0) {
        const std::size_t end = text.find("?>", i);
        if (end == std::string::npos) return std::nullopt;
        i = end + 2;
    }

    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '<') {
            // Character data: allowed only inside the root element and must
            // not contain markup-significant characters.
            if (stack.empty()) return std::nullopt;
            if (text[i] == '&' || text[i] == '>') return std::nullopt;
            ++i;
            continue;
        }
        if (done_root) return std::nullopt;  // content after the root closed
        std::size_t j = i + 1;
        if (j < n && text[j] == '/') {
            // Closing tag.
            ++j;
            std::size_t name_start = j;
            while (j < n && text[j] != '>' &&
                   !std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            const std::string name = text.substr(name_start, j - name_start);
            skip_ws(j);
            if (j >= n || text[j] != '>') return std::nullopt;
            if (stack.empty() || stack.back() != name) return std::nullopt;
            stack.pop_back();
            if (stack.empty()) done_root = true;
            i = j + 1;
            continue;
        }

        // Opening or self-closing tag.
        std::size_t name_start = j;
        while (j < n && text[j] != '>' && text[j] != '/' &&
               !std::isspace(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        const std::string name = text.substr(name_start, j - name_start);
        if (name.empty()) return std::nullopt;

        // Attributes.
        std::string view_box;
        while (true) {
            skip_ws(j);
            if (j >= n) return std::nullopt;
            if (text[j] == '>' || text[j] == '/') break;
            std::size_t attr_start = j;
            while (j < n && text[j] != '=' &&
                   !std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            const std::string attr = text.substr(attr_start, j - attr_start);
            skip_ws(j);
            if (j >= n || text[j] != '=') return std::nullopt;
            ++j;
            skip_ws(j);
            if (j >= n || (text[j] != '"' && text[j] != '\'')) return std::nullopt;
            const char quote = text[j];
            ++j;
            std::size_t value_start = j;
            while (j < n && text[j] != quote) {
                if (text[j] == '<') return std::nullopt;
                ++j;
            }
            if (j >= n) return std::nullopt;
            if (attr == "viewBox") view_box = text.substr(value_start, j - value_start);
            ++j;
        }

        const bool self_closing = text[j] == '/';
        if (self_closing) {
            ++j;
            if (j >= n || text[j] != '>') return std::nullopt;
        }
        if (!seen_root) {
            info.root = name;
            info.view_box = view_box;
            seen_root = true;
        } else if (stack.empty()) {
            return std::nullopt;  // second root element
        }
        if (!self_closing) {
            stack.push_back(name);
        } else if (stack.empty()) {
            done_root = true;
        }
        i = j + 1;
    }
    if (!seen_root || !stack.empty()) return std::nullopt;
    return info;
}

// Parses "M x,y C x,y x,y x,y ... [Z]" path data into runs of control points.
struct ParsedSubpath {
    std::vector<Point2> controls;  // 3k + 1 points for k segments
    bool closed = false;
};

inline std::optional<std::vector<ParsedSubpath>> parse_path_data(const std::string& d) {
    std::vector<ParsedSubpath> subs;
    std::size_t i = 0;
    const std::size_t n = d.size();

    auto skip_ws = [&] {
        while (i < n && (d[i] == ' ' || d[i] == ',')) ++i;
    };
    auto read_point = [&]() -> std::optional<Point2> {
        skip_ws();
        char* end = nullptr;
        const double x = std::strtod(d.c_str() + i, &end);
        if (end == d.c_str() + i) return std::nullopt;
        i = static_cast<std::size_t>(end - d.c_str());
        skip_ws();
        const double y = std::strtod(d.c_str() + i, &end);
        if (end == d.c_str() + i) return std::nullopt;
        i = static_cast<std::size_t>(end - d.c_str());
        return Point2{x, y};
    };

    while (true) {
        skip_ws();
        if (i >= n) break;
        if (d[i] != 'M') return std::nullopt;
        ++i;
        ParsedSubpath sub;
        auto start = read_point();
        if (!start) return std::nullopt;
        sub.controls.push_back(*start);
        while (true) {
            skip_ws();
            if (i >= n) break;
            if (d[i] == 'C') {
                ++i;
                for (int k = 0; k < 3; ++k) {
                    auto p = read_point();
                    if (!p) return std::nullopt;
                    sub.controls.push_back(*p);
                }
            } else if (d[i] == 'Z') {
                ++i;
                sub.closed = true;
                break;
            } else if (d[i] == 'M') {
                break;
            } else {
                return std::nullopt;
            }
        }
        if (sub.controls.size() < 4 || (sub.controls.size() - 1) % 3 != 0) return std::nullopt;
        subs.push_back(std::move(sub));
    }
    return subs;
}

}  // namespace testutil
