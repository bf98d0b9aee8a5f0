#include "docbin/sauvola.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace docbin {

namespace {

void check_window(int window) {
    if (window < 1 || window % 2 == 0) {
        throw std::invalid_argument("window size must be odd and positive");
    }
}

void check_params(const SauvolaParams& params) {
    check_window(params.window);
    if (!(params.r > 0.0)) {
        throw std::invalid_argument("sauvola: r must be positive");
    }
}

} // namespace

WindowStats stats_from_sums(std::int64_t sum, std::int64_t sum_sq, int count) {
    if (count < 1) {
        throw std::invalid_argument("stats_from_sums: empty window");
    }
    const double n = count;
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    WindowStats stats;
    stats.mean = mean;
    stats.stddev = var > 0.0 ? std::sqrt(var) : 0.0;
    stats.count = count;
    return stats;
}

WindowStats window_stats(const GrayImage& img, int x, int y, int window) {
    check_window(window);
    if (x < 0 || x >= img.width() || y < 0 || y >= img.height()) {
        throw std::invalid_argument("window_stats: centre outside image");
    }
    const int half = window / 2;
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
            const std::int64_t v = img.at_clamped(x + dx, y + dy);
            sum += v;
            sum_sq += v * v;
        }
    }
    return stats_from_sums(sum, sum_sq, window * window);
}

double sauvola_threshold(const WindowStats& stats, const SauvolaParams& params) {
    return stats.mean * (1.0 + params.k * (stats.stddev / params.r - 1.0));
}

SlidingWindowSums::SlidingWindowSums(const GrayImage& img, int window)
    : img_(&img), window_(window), half_(window / 2) {
    check_window(window);
    col_sum_.assign(img.width(), 0);
    col_sum_sq_.assign(img.width(), 0);
    for (int dy = -half_; dy <= half_; ++dy) {
        add_band_row(clamp_y(dy), 1);
    }
    reset_walk();
}

int SlidingWindowSums::clamp_x(int x) const noexcept {
    return std::clamp(x, 0, img_->width() - 1);
}

int SlidingWindowSums::clamp_y(int y) const noexcept {
    return std::clamp(y, 0, img_->height() - 1);
}

void SlidingWindowSums::add_band_row(int y, std::int64_t sign) {
    for (int x = 0; x < img_->width(); ++x) {
        const std::int64_t v = img_->at(x, y);
        col_sum_[x] += sign * v;
        col_sum_sq_[x] += sign * v * v;
    }
}

void SlidingWindowSums::advance_row() {
    if (row_ + 1 >= img_->height()) {
        throw std::out_of_range("SlidingWindowSums: advance past last row");
    }
    // The band is the multiset of clamped rows row-half .. row+half; moving
    // down drops the lowest member and gains one past the old top.
    add_band_row(clamp_y(row_ - half_), -1);
    add_band_row(clamp_y(row_ + 1 + half_), 1);
    ++row_;
    reset_walk();
}

void SlidingWindowSums::reset_walk() {
    col_ = 0;
    sum_ = 0;
    sum_sq_ = 0;
    for (int dx = -half_; dx <= half_; ++dx) {
        const int x = clamp_x(dx);
        sum_ += col_sum_[x];
        sum_sq_ += col_sum_sq_[x];
    }
}

void SlidingWindowSums::step_right() {
    if (col_ + 1 >= img_->width()) {
        throw std::out_of_range("SlidingWindowSums: step past last column");
    }
    const int leaving = clamp_x(col_ - half_);
    const int entering = clamp_x(col_ + 1 + half_);
    sum_ += col_sum_[entering] - col_sum_[leaving];
    sum_sq_ += col_sum_sq_[entering] - col_sum_sq_[leaving];
    ++col_;
}

namespace {

template <typename StatsAt>
SauvolaResult binarize_sauvola_with(const GrayImage& img, const SauvolaParams& params,
                                    StatsAt&& stats_at) {
    std::vector<std::uint8_t> binary(img.pixels().size());
    std::vector<double> thresholds(img.pixels().size());
    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x, ++i) {
            const double t = sauvola_threshold(stats_at(x, y), params);
            thresholds[i] = t;
            binary[i] = img.pixels()[i] <= t ? 1 : 0;
        }
    }
    return SauvolaResult{BinaryImage(img.width(), img.height(), std::move(binary)),
                         ThresholdMap(img.width(), img.height(), std::move(thresholds))};
}

} // namespace

SauvolaResult binarize_sauvola_naive(const GrayImage& img, const SauvolaParams& params) {
    check_params(params);
    return binarize_sauvola_with(img, params, [&](int x, int y) {
        return window_stats(img, x, y, params.window);
    });
}

SauvolaResult binarize_sauvola_fast(const GrayImage& img, const SauvolaParams& params) {
    check_params(params);
    SlidingWindowSums sums(img, params.window);
    return binarize_sauvola_with(img, params, [&](int x, int y) {
        if (y != sums.row()) {
            sums.advance_row();
        }
        if (x != sums.col()) {
            sums.step_right();
        }
        return sums.stats();
    });
}

} // namespace docbin
