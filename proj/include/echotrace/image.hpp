#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "contour.hpp"
#include "errors.hpp"

namespace echotrace {

// Grayscale frame with intensities normalized to [0,1], row-major storage
// (row 0 first). mm_per_px carries the acquisition calibration so distances
// measured in pixels can be reported in millimetres.
struct UltrasoundFrame {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> intensities;
    double mm_per_px = 0.35;
    std::size_t frame_index = 0;

    double at(std::size_t row, std::size_t col) const { return intensities[row * width + col]; }
    double& at(std::size_t row, std::size_t col) { return intensities[row * width + col]; }
};

// Binary contour mask at the working resolution.
struct RasterContour {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> mask;

    std::uint8_t at(std::size_t row, std::size_t col) const { return mask[row * width + col]; }
    std::uint8_t& at(std::size_t row, std::size_t col) { return mask[row * width + col]; }
};

struct Rect {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t w = 0;
    std::size_t h = 0;
};

// Training vector layout: w*h ultrasound intensities, then w*h contour mask
// values, then one constant 1.0. 1981 components at the default 33x30.
using JointExample = std::vector<double>;

inline std::size_t joint_length(std::size_t w, std::size_t h) { return 2 * w * h + 1; }
inline std::size_t us_input_length(std::size_t w, std::size_t h) { return w * h + 1; }

inline UltrasoundFrame crop_roi(const UltrasoundFrame& frame, const Rect& rect) {
    if (rect.w == 0 || rect.h == 0 || rect.x + rect.w > frame.width ||
        rect.y + rect.h > frame.height) {
        throw domain_error("crop_roi: rect exceeds frame bounds");
    }
    UltrasoundFrame out;
    out.width = rect.w;
    out.height = rect.h;
    out.mm_per_px = frame.mm_per_px;
    out.frame_index = frame.frame_index;
    out.intensities.resize(rect.w * rect.h);
    for (std::size_t r = 0; r < rect.h; ++r) {
        for (std::size_t c = 0; c < rect.w; ++c) {
            out.at(r, c) = frame.at(rect.y + r, rect.x + c);
        }
    }
    return out;
}

namespace detail {

// Per output cell, the list of source cells it covers and the fraction of
// the source cell inside it. Weights along one axis sum to in/out.
struct AxisSpan {
    std::size_t first = 0;
    std::vector<double> weights;
};

inline std::vector<AxisSpan> axis_spans(std::size_t in, std::size_t out) {
    std::vector<AxisSpan> spans(out);
    const double scale = static_cast<double>(in) / static_cast<double>(out);
    for (std::size_t o = 0; o < out; ++o) {
        double lo = o * scale;
        double hi = (o + 1) * scale;
        std::size_t first = static_cast<std::size_t>(lo);
        std::size_t last = static_cast<std::size_t>(std::ceil(hi)) - 1;
        if (last >= in) last = in - 1;
        AxisSpan& s = spans[o];
        s.first = first;
        s.weights.resize(last - first + 1);
        for (std::size_t i = first; i <= last; ++i) {
            double cell_lo = std::max(lo, static_cast<double>(i));
            double cell_hi = std::min(hi, static_cast<double>(i + 1));
            s.weights[i - first] = cell_hi - cell_lo;
        }
    }
    return spans;
}

} // namespace detail

// Area-weighted reduction to the working resolution; preserves the global
// mean, which the white/black transition detector depends on.
inline UltrasoundFrame downsample(const UltrasoundFrame& frame, std::size_t out_w = 33,
                                  std::size_t out_h = 30) {
    if (frame.width < out_w || frame.height < out_h) {
        throw domain_error("downsample: frame smaller than target resolution");
    }
    const auto cols = detail::axis_spans(frame.width, out_w);
    const auto rows = detail::axis_spans(frame.height, out_h);
    const double cell_area = (static_cast<double>(frame.width) / out_w) *
                             (static_cast<double>(frame.height) / out_h);
    UltrasoundFrame out;
    out.width = out_w;
    out.height = out_h;
    out.mm_per_px = frame.mm_per_px;
    out.frame_index = frame.frame_index;
    out.intensities.resize(out_w * out_h);
    for (std::size_t r = 0; r < out_h; ++r) {
        const auto& rs = rows[r];
        for (std::size_t c = 0; c < out_w; ++c) {
            const auto& cs = cols[c];
            double acc = 0.0;
            for (std::size_t i = 0; i < rs.weights.size(); ++i) {
                const double wr = rs.weights[i];
                const double* src = frame.intensities.data() + (rs.first + i) * frame.width;
                for (std::size_t j = 0; j < cs.weights.size(); ++j) {
                    acc += wr * cs.weights[j] * src[cs.first + j];
                }
            }
            out.at(r, c) = acc / cell_area;
        }
    }
    return out;
}

struct RasterizeResult {
    RasterContour raster;
    std::size_t dropped = 0; // points outside [0,w) x [0,h)
};

// Points sharing an output column are averaged before rounding, so a
// single-valued contour never sets more than one pixel per column.
inline RasterizeResult rasterize_contour(const ContourPointSet& set, std::size_t w,
                                         std::size_t h, std::size_t thickness = 1) {
    RasterizeResult res;
    res.raster.width = w;
    res.raster.height = h;
    res.raster.mask.assign(w * h, 0);
    std::map<std::size_t, std::pair<double, std::size_t>> columns; // col -> (sum_y, count)
    for (const ContourPoint& p : set.points) {
        if (!(p.x >= 0.0) || !(p.y >= 0.0) || p.x >= static_cast<double>(w) ||
            p.y >= static_cast<double>(h)) {
            ++res.dropped;
            continue;
        }
        // in-range points near the right edge round to the last existing cell
        std::size_t col = std::min<std::size_t>(static_cast<std::size_t>(std::lround(p.x)), w - 1);
        auto& acc = columns[col];
        acc.first += p.y;
        acc.second += 1;
    }
    const long half = static_cast<long>(thickness - 1) / 2;
    for (const auto& [col, acc] : columns) {
        double y = acc.first / static_cast<double>(acc.second);
        long base = std::min<long>(std::lround(y), static_cast<long>(h) - 1);
        for (std::size_t t = 0; t < thickness; ++t) {
            long row = base - half + static_cast<long>(t);
            if (row < 0 || row >= static_cast<long>(h)) continue;
            res.raster.at(static_cast<std::size_t>(row), col) = 1;
        }
    }
    return res;
}

// Inverse of rasterize_contour up to quantization: per occupied column, the
// mean set row. An all-zero raster yields an (invalid) empty set.
inline ContourPointSet vectorize_contour(const RasterContour& raster) {
    ContourPointSet set;
    for (std::size_t c = 0; c < raster.width; ++c) {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t r = 0; r < raster.height; ++r) {
            if (raster.at(r, c)) {
                sum += static_cast<double>(r);
                ++count;
            }
        }
        if (count > 0) {
            set.points.push_back({static_cast<double>(c), sum / static_cast<double>(count)});
        }
    }
    return set;
}

inline JointExample assemble_joint(const UltrasoundFrame& us, const RasterContour& contour) {
    if (us.width != contour.width || us.height != contour.height) {
        throw domain_error("assemble_joint: dimension mismatch");
    }
    const std::size_t n = us.width * us.height;
    JointExample v;
    v.reserve(2 * n + 1);
    v.insert(v.end(), us.intensities.begin(), us.intensities.end());
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(contour.mask[i] ? 1.0 : 0.0);
    }
    v.push_back(1.0);
    return v;
}

} // namespace echotrace
