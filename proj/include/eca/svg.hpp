#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "eca/errors.hpp"
#include "eca/geometry.hpp"
#include "eca/io.hpp"
#include "eca/trace.hpp"

// Orthographic SVG rendering of closed traces.  The far hemisphere is drawn
// dimmed.  Output contains no timestamps or environment data, so identical
// inputs produce identical bytes.

namespace eca {

struct ViewSpec {
    double azimuth_deg = 40.0;
    double elevation_deg = 25.0;
    int size_px = 640;
    double margin_px = 24.0;
};

namespace detail {

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

} // namespace detail

inline std::string render_svg(const SphereTrace& trace, const ViewSpec& view) {
    if (trace.closure_gap > 1e-5 * trace.params.R)
        throw NotClosed("render_svg: trace does not close");
    const double az = view.azimuth_deg * M_PI / 180.0;
    const double el = view.elevation_deg * M_PI / 180.0;
    const Vec3 dir{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az),
                   std::sin(el)};
    Vec3 right = cross(Vec3{0, 0, 1}, dir);
    if (norm(right) < 1e-9) right = Vec3{1, 0, 0};
    right = normalized(right);
    const Vec3 up = cross(dir, right);

    const double R = trace.params.R;
    const double half = view.size_px / 2.0;
    const double scale = (half - view.margin_px) / R;
    const auto px = [&](const Vec3& p, double& u, double& v, double& depth) {
        u = half + scale * dot(p, right);
        v = half - scale * dot(p, up);
        depth = dot(p, dir);
    };

    // split into runs of constant visibility
    struct Run {
        bool front;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Run> runs;
    bool cur_front = true;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        double u, v, depth;
        px(trace.samples[i].x, u, v, depth);
        const bool front = depth >= 0.0;
        if (runs.empty() || front != cur_front) {
            Run run;
            run.front = front;
            if (!runs.empty() && !runs.back().pts.empty())
                run.pts.push_back(runs.back().pts.back());
            runs.push_back(std::move(run));
            cur_front = front;
        }
        runs.back().pts.emplace_back(u, v);
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(view.size_px) + "\" height=\"" +
           std::to_string(view.size_px) + "\" viewBox=\"0 0 " +
           std::to_string(view.size_px) + " " + std::to_string(view.size_px) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<circle cx=\"" + detail::svg_coord(half) + "\" cy=\"" +
           detail::svg_coord(half) + "\" r=\"" + detail::svg_coord(scale * R) +
           "\" fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";

    const auto emit_runs = [&](bool front_pass) {
        for (const Run& run : runs) {
            if (run.front != front_pass || run.pts.size() < 2) continue;
            out += "<polyline fill=\"none\" stroke=\"#1f5fa6\" ";
            out += front_pass ? "stroke-width=\"1.6\""
                              : "stroke-width=\"1.2\" stroke-opacity=\"0.25\"";
            out += " points=\"";
            for (std::size_t i = 0; i < run.pts.size(); ++i) {
                if (i) out += ' ';
                out += detail::svg_coord(run.pts[i].first) + "," +
                       detail::svg_coord(run.pts[i].second);
            }
            out += "\"/>\n";
        }
    };
    emit_runs(false);
    emit_runs(true);
    out += "</svg>\n";
    return out;
}

inline void emit_svg(const SphereTrace& trace, const ViewSpec& view,
                     const std::filesystem::path& path) {
    atomic_write(path, render_svg(trace, view));
}

} // namespace eca
