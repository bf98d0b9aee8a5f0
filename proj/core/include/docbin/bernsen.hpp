#ifndef DOCBIN_BERNSEN_HPP
#define DOCBIN_BERNSEN_HPP

#include "docbin/image.hpp"

namespace docbin {

/// How local contrast c(x, y) is measured: max - min over the window, or the
/// window's standard deviation.
enum class ContrastMeasure { range, stddev };

/// Per-pixel midrange g = (f_max + f_min) / 2 and contrast c, both over the
/// same clamped window. With range contrast c is in [0, 255]; with stddev
/// contrast c is in [0, 127.5]. g is the midrange in both cases.
struct BernsenMaps {
    ThresholdMap g;
    ThresholdMap c;
    ContrastMeasure contrast;
};

/// Contrast gate c* and gray threshold f* for ghost suppression, each an
/// Otsu threshold over the rounded c respectively g values.
struct GhostThresholds {
    int c_star = 0;
    int f_star = 0;

    bool operator==(const GhostThresholds&) const = default;
};

BernsenMaps bernsen_maps(const GrayImage& img, int window, ContrastMeasure contrast);

/// Otsu over the quantized (round to nearest, clamp to 0..255) c and g values
/// inside `region`.
GhostThresholds ghost_thresholds(const BernsenMaps& maps, const Rect& region);

/// Same, over the whole map.
GhostThresholds ghost_thresholds_global(const BernsenMaps& maps);

/// Classification of one pixel: foreground iff the midrange comparison fires
/// in high-contrast territory, or the gray gate fires in low-contrast
/// territory.
inline bool bernsen_rule(double f, double g, double c, const GhostThresholds& ghost) {
    return (f < g && c > ghost.c_star) || (f < ghost.f_star && c <= ghost.c_star);
}

/// Applies the rule at every pixel with one fixed pair of thresholds.
BinaryImage bernsen_classify(const GrayImage& img, const BernsenMaps& maps,
                             const GhostThresholds& ghost);

enum class BernsenVariant { original, modified };

/// original: range contrast, one global (c*, f*).
/// modified: stddev contrast; the image is partitioned into a grid and each
/// cell is classified with thresholds from its own patch of the c and g maps.
/// The grid arguments apply to the modified variant only.
BinaryImage bernsen_binarize(const GrayImage& img, int window = 31,
                             BernsenVariant variant = BernsenVariant::original,
                             int grid_rows = 3, int grid_cols = 3);

} // namespace docbin

#endif
