#ifndef DOCBIN_SAUVOLA_HPP
#define DOCBIN_SAUVOLA_HPP

#include <cstdint>
#include <vector>

#include "docbin/image.hpp"

namespace docbin {

struct SauvolaParams {
    int window = 15;
    double k = 0.5;
    double r = 128.0;
};

/// Population mean and standard deviation of a pixel window. count is always
/// window squared: windows reaching past the border replicate edge pixels.
struct WindowStats {
    double mean = 0.0;
    double stddev = 0.0;
    int count = 0;
};

/// Converts exact integer window sums into mean and stddev. Every scan
/// strategy funnels through this one expression, so two scans that agree on
/// the integer sums agree bitwise on the statistics.
WindowStats stats_from_sums(std::int64_t sum, std::int64_t sum_sq, int count);

/// Direct summation over the window centred at (x, y).
WindowStats window_stats(const GrayImage& img, int x, int y, int window);

/// T = m * (1 + k * (s / r - 1)).
double sauvola_threshold(const WindowStats& stats, const SauvolaParams& params);

/// Incremental window sums for a full raster scan. The row band keeps one
/// column aggregate per image column; advancing a row swaps one sample per
/// column, stepping right swaps one column aggregate. Sums equal direct
/// summation exactly at every position.
class SlidingWindowSums {
public:
    SlidingWindowSums(const GrayImage& img, int window);

    int window() const noexcept { return window_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

    /// Moves the band from the current row to the next; resets the walk.
    void advance_row();
    /// Restarts the horizontal walk at column 0 of the current row.
    void reset_walk();
    /// Moves the walk one column right.
    void step_right();

    std::int64_t sum() const noexcept { return sum_; }
    std::int64_t sum_sq() const noexcept { return sum_sq_; }
    int count() const noexcept { return window_ * window_; }
    WindowStats stats() const { return stats_from_sums(sum_, sum_sq_, count()); }

private:
    int clamp_x(int x) const noexcept;
    int clamp_y(int y) const noexcept;
    void add_band_row(int y, std::int64_t sign);

    const GrayImage* img_;
    int window_;
    int half_;
    int row_ = 0;
    int col_ = 0;
    std::vector<std::int64_t> col_sum_;
    std::vector<std::int64_t> col_sum_sq_;
    std::int64_t sum_ = 0;
    std::int64_t sum_sq_ = 0;
};

struct SauvolaResult {
    BinaryImage binary;
    ThresholdMap thresholds;
};

/// Reference implementation: direct window summation per pixel.
SauvolaResult binarize_sauvola_naive(const GrayImage& img, const SauvolaParams& params = {});

/// Incremental implementation; produces bitwise identical output to the
/// naive scan.
SauvolaResult binarize_sauvola_fast(const GrayImage& img, const SauvolaParams& params = {});

} // namespace docbin

#endif
