#include "docbin/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace docbin {

namespace {

void check_dimensions(int width, int height, const char* what) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument(std::string(what) + ": dimensions must be positive");
    }
}

} // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    check_dimensions(width, height, "GrayImage");
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width, height, "GrayImage");
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("GrayImage: pixel buffer does not match dimensions");
    }
}

std::uint8_t GrayImage::at_clamped(int x, int y) const {
    const int cx = std::clamp(x, 0, width_ - 1);
    const int cy = std::clamp(y, 0, height_ - 1);
    return at(cx, cy);
}

BinaryImage::BinaryImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    check_dimensions(width, height, "BinaryImage");
    if (fill > 1) {
        throw std::invalid_argument("BinaryImage: values must be 0 or 1");
    }
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width, height, "BinaryImage");
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("BinaryImage: pixel buffer does not match dimensions");
    }
    for (const std::uint8_t v : pixels_) {
        if (v > 1) {
            throw std::invalid_argument("BinaryImage: values must be 0 or 1");
        }
    }
}

ThresholdMap::ThresholdMap(int width, int height, double fill)
    : width_(width), height_(height) {
    check_dimensions(width, height, "ThresholdMap");
    values_.assign(static_cast<std::size_t>(width) * height, fill);
}

ThresholdMap::ThresholdMap(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
    check_dimensions(width, height, "ThresholdMap");
    if (values_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("ThresholdMap: value buffer does not match dimensions");
    }
}

double Histogram::total() const noexcept {
    double sum = 0.0;
    for (const double b : bins) {
        sum += b;
    }
    return sum;
}

Histogram histogram(const GrayImage& img) {
    return histogram(img, Rect{0, 0, img.width(), img.height()});
}

Histogram histogram(const GrayImage& img, const Rect& region) {
    if (region.x < 0 || region.y < 0 || region.width < 1 || region.height < 1 ||
        region.x + region.width > img.width() || region.y + region.height > img.height()) {
        throw std::invalid_argument("histogram: region outside image");
    }
    Histogram h;
    for (int y = region.y; y < region.y + region.height; ++y) {
        for (int x = region.x; x < region.x + region.width; ++x) {
            h.bins[img.at(x, y)] += 1.0;
        }
    }
    return h;
}

} // namespace docbin
