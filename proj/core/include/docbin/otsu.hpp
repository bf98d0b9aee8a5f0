#ifndef DOCBIN_OTSU_HPP
#define DOCBIN_OTSU_HPP

#include <vector>

#include "docbin/image.hpp"

namespace docbin {

/// Threshold t splits a histogram into class 0 (levels <= t, foreground) and
/// class 1 (levels > t). sigma_b is the between-class variance of the split,
/// sigma_t the total variance, eta = sigma_b / sigma_t in [0, 1].
struct OtsuResult {
    int threshold = 0;
    double sigma_b = 0.0;
    double sigma_t = 0.0;
    double eta = 0.0;

    bool operator==(const OtsuResult&) const = default;
};

/// Weight and mean level of the two classes induced by a split.
/// An empty class reports weight 0 and mean 0.
struct ClassMoments {
    double weight0 = 0.0;
    double mean0 = 0.0;
    double weight1 = 0.0;
    double mean1 = 0.0;
};

ClassMoments class_moments(const Histogram& hist, int split);

/// Exhaustive search for the threshold maximising sigma_b; ties go to the
/// smallest threshold. A single-level histogram thresholds at that level with
/// sigma_b = eta = 0. Throws std::invalid_argument on an empty histogram.
OtsuResult otsu_threshold(const Histogram& hist);

/// Pixels <= threshold become foreground (1).
BinaryImage binarize_global(const GrayImage& img, int threshold);

BinaryImage binarize_otsu(const GrayImage& img);

/// Row-major partition of an image into rows x cols rectangles. Cell edges
/// come from integer division; the last row/column absorbs the remainder.
struct WindowGrid {
    int rows = 0;
    int cols = 0;
    std::vector<Rect> cells;
};

WindowGrid make_grid(int width, int height, int rows, int cols);

/// Per-cell Otsu results, in the row-major order of the grid cells.
std::vector<OtsuResult> local_otsu_results(const GrayImage& img, int rows, int cols);

/// Each grid cell binarized with its own Otsu threshold.
BinaryImage binarize_otsu_local(const GrayImage& img, int rows, int cols);

} // namespace docbin

#endif
