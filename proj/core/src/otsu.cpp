#include "docbin/otsu.hpp"

#include <algorithm>
#include <stdexcept>

namespace docbin {

ClassMoments class_moments(const Histogram& hist, int split) {
    if (split < 0 || split >= Histogram::levels) {
        throw std::invalid_argument("class_moments: split out of range");
    }
    double w0 = 0.0, m0 = 0.0, w1 = 0.0, m1 = 0.0;
    for (int i = 0; i <= split; ++i) {
        w0 += hist.bins[i];
        m0 += i * hist.bins[i];
    }
    for (int i = split + 1; i < Histogram::levels; ++i) {
        w1 += hist.bins[i];
        m1 += i * hist.bins[i];
    }
    ClassMoments cm;
    cm.weight0 = w0;
    cm.mean0 = w0 > 0.0 ? m0 / w0 : 0.0;
    cm.weight1 = w1;
    cm.mean1 = w1 > 0.0 ? m1 / w1 : 0.0;
    return cm;
}

OtsuResult otsu_threshold(const Histogram& hist) {
    double w_total = 0.0, m_total = 0.0, m2_total = 0.0;
    for (int i = 0; i < Histogram::levels; ++i) {
        const double h = hist.bins[i];
        w_total += h;
        m_total += i * h;
        m2_total += static_cast<double>(i) * i * h;
    }
    if (w_total == 0.0) {
        throw std::invalid_argument("otsu_threshold: empty histogram");
    }

    const double mu = m_total / w_total;
    const double sigma_t = std::max(0.0, m2_total / w_total - mu * mu);

    // The prefix sums accumulate in the same order as the totals above, so a
    // split with an empty class compares bitwise equal to 0 or w_total.
    int best_k = -1;
    double best_sigma = -1.0;
    double w0 = 0.0, m0 = 0.0;
    for (int k = 0; k < Histogram::levels; ++k) {
        w0 += hist.bins[k];
        m0 += k * hist.bins[k];
        if (w0 == 0.0 || w0 == w_total) {
            continue;
        }
        const double w1 = w_total - w0;
        const double mu0 = m0 / w0;
        const double mu1 = (m_total - m0) / w1;
        const double diff = mu1 - mu0;
        const double sigma_b = (w0 / w_total) * (w1 / w_total) * diff * diff;
        if (sigma_b > best_sigma) {
            best_sigma = sigma_b;
            best_k = k;
        }
    }

    OtsuResult result;
    result.sigma_t = sigma_t;
    if (best_k < 0) {
        // All mass sits in one bin; call that level the threshold.
        for (int i = 0; i < Histogram::levels; ++i) {
            if (hist.bins[i] > 0.0) {
                result.threshold = i;
                break;
            }
        }
        return result;
    }
    result.threshold = best_k;
    result.sigma_b = best_sigma;
    if (sigma_t > 0.0) {
        result.eta = std::clamp(best_sigma / sigma_t, 0.0, 1.0);
    }
    return result;
}

BinaryImage binarize_global(const GrayImage& img, int threshold) {
    if (threshold < 0 || threshold >= Histogram::levels) {
        throw std::invalid_argument("binarize_global: threshold out of range");
    }
    std::vector<std::uint8_t> out;
    out.reserve(img.pixels().size());
    for (const std::uint8_t p : img.pixels()) {
        out.push_back(p <= threshold ? 1 : 0);
    }
    return BinaryImage(img.width(), img.height(), std::move(out));
}

BinaryImage binarize_otsu(const GrayImage& img) {
    return binarize_global(img, otsu_threshold(histogram(img)).threshold);
}

WindowGrid make_grid(int width, int height, int rows, int cols) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("make_grid: empty image");
    }
    if (rows < 1 || cols < 1 || rows > height || cols > width) {
        throw std::invalid_argument("make_grid: grid does not fit image");
    }
    WindowGrid grid;
    grid.rows = rows;
    grid.cols = cols;
    grid.cells.reserve(static_cast<std::size_t>(rows) * cols);
    const int cell_w = width / cols;
    const int cell_h = height / rows;
    for (int r = 0; r < rows; ++r) {
        const int y = r * cell_h;
        const int h = r == rows - 1 ? height - y : cell_h;
        for (int c = 0; c < cols; ++c) {
            const int x = c * cell_w;
            const int w = c == cols - 1 ? width - x : cell_w;
            grid.cells.push_back(Rect{x, y, w, h});
        }
    }
    return grid;
}

std::vector<OtsuResult> local_otsu_results(const GrayImage& img, int rows, int cols) {
    const WindowGrid grid = make_grid(img.width(), img.height(), rows, cols);
    std::vector<OtsuResult> results;
    results.reserve(grid.cells.size());
    for (const Rect& cell : grid.cells) {
        results.push_back(otsu_threshold(histogram(img, cell)));
    }
    return results;
}

BinaryImage binarize_otsu_local(const GrayImage& img, int rows, int cols) {
    const WindowGrid grid = make_grid(img.width(), img.height(), rows, cols);
    std::vector<std::uint8_t> out(img.pixels().size(), 0);
    for (const Rect& cell : grid.cells) {
        const int t = otsu_threshold(histogram(img, cell)).threshold;
        for (int y = cell.y; y < cell.y + cell.height; ++y) {
            for (int x = cell.x; x < cell.x + cell.width; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * img.width() + x;
                out[i] = img.pixels()[i] <= t ? 1 : 0;
            }
        }
    }
    return BinaryImage(img.width(), img.height(), std::move(out));
}

} // namespace docbin
