#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace echotrace {

struct ContourPoint {
    double x = 0.0;
    double y = 0.0;
};

// Ordered contour samples, strictly increasing in x, in pixel coordinates of
// whatever grid produced them. An empty set marks an invalid contour.
struct ContourPointSet {
    std::vector<ContourPoint> points;

    bool valid() const noexcept { return !points.empty(); }
    std::size_t size() const noexcept { return points.size(); }
};

// Scales coordinates between pixel grids (contours live at the original
// frame resolution, the network at its reduced working resolution).
inline ContourPointSet rescale_points(const ContourPointSet& set,
                                      double from_w, double from_h,
                                      double to_w, double to_h) {
    if (from_w <= 0.0 || from_h <= 0.0 || to_w <= 0.0 || to_h <= 0.0) {
        throw domain_error("rescale_points: dimensions must be positive");
    }
    ContourPointSet out;
    out.points.reserve(set.points.size());
    const double sx = to_w / from_w;
    const double sy = to_h / from_h;
    for (const ContourPoint& p : set.points) {
        out.points.push_back({p.x * sx, p.y * sy});
    }
    return out;
}

inline ContourPointSet translate_points(const ContourPointSet& set, double dx, double dy) {
    ContourPointSet out;
    out.points.reserve(set.points.size());
    for (const ContourPoint& p : set.points) {
        out.points.push_back({p.x + dx, p.y + dy});
    }
    return out;
}

// "<stem>_00042<ext>"
inline std::string frame_file_name(const std::string& stem, std::size_t index,
                                   const std::string& ext) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "_%05zu", index);
    return stem + buf + ext;
}

// Contour text format: one "x<TAB>y" pair per line, '#' starts a comment.
inline void write_contour(const ContourPointSet& set, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw missing_artifact("write_contour: cannot open " + path.string());
    }
    char line[80];
    for (const ContourPoint& p : set.points) {
        std::snprintf(line, sizeof(line), "%.9g\t%.9g\n", p.x, p.y);
        out << line;
    }
}

inline ContourPointSet read_contour(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw missing_artifact("read_contour: cannot open " + path.string());
    }
    ContourPointSet set;
    std::string line;
    std::size_t line_no = 0;
    double prev_x = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double x = 0.0, y = 0.0;
        if (!(fields >> x)) continue; // blank or comment-only line
        if (!(fields >> y)) {
            throw parse_error(path.string() + ": line " + std::to_string(line_no) +
                                  ": expected \"x<TAB>y\"",
                              line_no);
        }
        if (set.valid() && x <= prev_x) {
            throw parse_error(path.string() + ": line " + std::to_string(line_no) +
                                  ": x coordinates must be strictly increasing",
                              line_no);
        }
        set.points.push_back({x, y});
        prev_x = x;
    }
    return set;
}

} // namespace echotrace
