#ifndef DOCBIN_TESTS_SUPPORT_HPP
#define DOCBIN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "docbin/image.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline docbin::GrayImage random_image(Rng& rng, int width, int height) {
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(level(rng));
    }
    return docbin::GrayImage(width, height, std::move(px));
}

/// Integer-weight histogram over `support` random levels. Integer weights
/// keep every oracle sum exact in double precision.
inline docbin::Histogram random_histogram(Rng& rng, int support) {
    std::uniform_int_distribution<int> level(0, 255);
    std::uniform_int_distribution<int> weight(1, 1000);
    docbin::Histogram h;
    for (int i = 0; i < support; ++i) {
        h.add(level(rng), weight(rng));
    }
    return h;
}

/// Exhaustive reference for the Otsu split: recomputes both class moments
/// from scratch at every candidate and keeps the smallest maximizer of
/// w0 w1 (mu1 - mu0)^2. Independent of the library's prefix-sum scan.
inline int oracle_otsu_threshold(const docbin::Histogram& hist) {
    double total = 0.0;
    for (const double b : hist.bins) {
        total += b;
    }
    int best_k = -1;
    double best = -1.0;
    for (int k = 0; k < docbin::Histogram::levels; ++k) {
        double w0 = 0.0, m0 = 0.0;
        for (int i = 0; i <= k; ++i) {
            w0 += hist.bins[i];
            m0 += i * hist.bins[i];
        }
        double w1 = 0.0, m1 = 0.0;
        for (int i = k + 1; i < docbin::Histogram::levels; ++i) {
            w1 += hist.bins[i];
            m1 += i * hist.bins[i];
        }
        if (w0 == 0.0 || w1 == 0.0) {
            continue;
        }
        const double mu0 = m0 / w0;
        const double mu1 = m1 / w1;
        const double diff = mu1 - mu0;
        const double sigma_b = (w0 / total) * (w1 / total) * diff * diff;
        if (sigma_b > best) {
            best = sigma_b;
            best_k = k;
        }
    }
    if (best_k < 0) {
        for (int i = 0; i < docbin::Histogram::levels; ++i) {
            if (hist.bins[i] > 0.0) {
                return i;
            }
        }
    }
    return best_k;
}

/// Two-pass mean/stddev over the clamped window; a different numerical
/// route than the library's sum-of-squares form.
inline std::pair<double, double> oracle_mean_stddev(const docbin::GrayImage& img, int x,
                                                    int y, int window) {
    const int half = window / 2;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(window) * window);
    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
            values.push_back(img.at_clamped(x + dx, y + dy));
        }
    }
    double mean = 0.0;
    for (const double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const double v : values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(std::max(0.0, var))};
}

/// Synthetic page: black L-shaped glyphs on a 24-pixel lattice over white.
/// Strokes are 2 pixels wide, so ink lands in every region of the page and
/// no 31x31 window is ever all-ink.
struct TextPage {
    docbin::GrayImage image;
    docbin::BinaryImage mask;
};

inline TextPage text_page(int width, int height) {
    std::vector<std::uint8_t> gray(static_cast<std::size_t>(width) * height, 255);
    std::vector<std::uint8_t> ink(static_cast<std::size_t>(width) * height, 0);
    const auto draw = [&](int x0, int y0, int x1, int y1) {
        for (int y = y0; y < std::min(y1, height); ++y) {
            for (int x = x0; x < std::min(x1, width); ++x) {
                gray[static_cast<std::size_t>(y) * width + x] = 0;
                ink[static_cast<std::size_t>(y) * width + x] = 1;
            }
        }
    };
    for (int ty = 0; ty < height; ty += 24) {
        for (int tx = 0; tx < width; tx += 24) {
            draw(tx + 4, ty + 4, tx + 6, ty + 16);   // stem
            draw(tx + 4, ty + 14, tx + 16, ty + 16); // foot
        }
    }
    return {docbin::GrayImage(width, height, std::move(gray)),
            docbin::BinaryImage(width, height, std::move(ink))};
}

inline double agreement(const docbin::BinaryImage& a, const docbin::BinaryImage& b) {
    std::int64_t same = 0;
    for (std::size_t i = 0; i < a.pixels().size(); ++i) {
        same += a.pixels()[i] == b.pixels()[i];
    }
    return static_cast<double>(same) / static_cast<double>(a.pixel_count());
}

} // namespace testsupport

#endif
