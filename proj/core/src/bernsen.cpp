#include "docbin/bernsen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "docbin/otsu.hpp"
#include "docbin/sauvola.hpp"

namespace docbin {

namespace {

int quantize_level(double v) {
    return static_cast<int>(std::clamp<long>(std::lround(v), 0, Histogram::levels - 1));
}

Histogram quantized_histogram(const ThresholdMap& map, const Rect& region) {
    if (region.x < 0 || region.y < 0 || region.width < 1 || region.height < 1 ||
        region.x + region.width > map.width() || region.y + region.height > map.height()) {
        throw std::invalid_argument("ghost_thresholds: region outside map");
    }
    Histogram h;
    for (int y = region.y; y < region.y + region.height; ++y) {
        for (int x = region.x; x < region.x + region.width; ++x) {
            h.add(quantize_level(map.at(x, y)));
        }
    }
    return h;
}

} // namespace

BernsenMaps bernsen_maps(const GrayImage& img, int window, ContrastMeasure contrast) {
    if (window < 1 || window % 2 == 0) {
        throw std::invalid_argument("window size must be odd and positive");
    }
    const int half = window / 2;
    std::vector<double> g(img.pixels().size());
    std::vector<double> c(img.pixels().size());

    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x, ++i) {
            std::uint8_t lo = 255, hi = 0;
            for (int dy = -half; dy <= half; ++dy) {
                for (int dx = -half; dx <= half; ++dx) {
                    const std::uint8_t v = img.at_clamped(x + dx, y + dy);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            g[i] = (static_cast<double>(hi) + lo) / 2.0;
            c[i] = static_cast<double>(hi) - lo;
        }
    }

    if (contrast == ContrastMeasure::stddev) {
        SlidingWindowSums sums(img, window);
        i = 0;
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x, ++i) {
                if (y != sums.row()) {
                    sums.advance_row();
                }
                if (x != sums.col()) {
                    sums.step_right();
                }
                c[i] = sums.stats().stddev;
            }
        }
    }

    return BernsenMaps{ThresholdMap(img.width(), img.height(), std::move(g)),
                       ThresholdMap(img.width(), img.height(), std::move(c)), contrast};
}

GhostThresholds ghost_thresholds(const BernsenMaps& maps, const Rect& region) {
    GhostThresholds ghost;
    ghost.c_star = otsu_threshold(quantized_histogram(maps.c, region)).threshold;
    ghost.f_star = otsu_threshold(quantized_histogram(maps.g, region)).threshold;
    return ghost;
}

GhostThresholds ghost_thresholds_global(const BernsenMaps& maps) {
    return ghost_thresholds(maps, Rect{0, 0, maps.c.width(), maps.c.height()});
}

BinaryImage bernsen_classify(const GrayImage& img, const BernsenMaps& maps,
                             const GhostThresholds& ghost) {
    if (maps.g.width() != img.width() || maps.g.height() != img.height()) {
        throw std::invalid_argument("bernsen_classify: maps do not match image");
    }
    std::vector<std::uint8_t> out(img.pixels().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = bernsen_rule(img.pixels()[i], maps.g.values()[i], maps.c.values()[i], ghost)
                     ? 1
                     : 0;
    }
    return BinaryImage(img.width(), img.height(), std::move(out));
}

BinaryImage bernsen_binarize(const GrayImage& img, int window, BernsenVariant variant,
                             int grid_rows, int grid_cols) {
    if (variant == BernsenVariant::original) {
        const BernsenMaps maps = bernsen_maps(img, window, ContrastMeasure::range);
        return bernsen_classify(img, maps, ghost_thresholds_global(maps));
    }

    const BernsenMaps maps = bernsen_maps(img, window, ContrastMeasure::stddev);
    const WindowGrid grid = make_grid(img.width(), img.height(), grid_rows, grid_cols);
    std::vector<std::uint8_t> out(img.pixels().size());
    for (const Rect& cell : grid.cells) {
        const GhostThresholds ghost = ghost_thresholds(maps, cell);
        for (int y = cell.y; y < cell.y + cell.height; ++y) {
            for (int x = cell.x; x < cell.x + cell.width; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * img.width() + x;
                out[i] = bernsen_rule(img.pixels()[i], maps.g.values()[i],
                                      maps.c.values()[i], ghost)
                             ? 1
                             : 0;
            }
        }
    }
    return BinaryImage(img.width(), img.height(), std::move(out));
}

} // namespace docbin
