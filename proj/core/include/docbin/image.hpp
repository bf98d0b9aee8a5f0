#ifndef DOCBIN_IMAGE_HPP
#define DOCBIN_IMAGE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace docbin {

/// 8-bit grayscale raster, row-major, top-left origin.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::int64_t pixel_count() const noexcept {
        return static_cast<std::int64_t>(width_) * height_;
    }

    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    /// Edge-replicating access: out-of-range coordinates are clamped to the
    /// nearest valid pixel.
    std::uint8_t at_clamped(int x, int y) const;

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Two-tone raster. 1 = foreground (ink, black), 0 = background (white).
class BinaryImage {
public:
    BinaryImage(int width, int height, std::uint8_t fill = 0);
    BinaryImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::int64_t pixel_count() const noexcept {
        return static_cast<std::int64_t>(width_) * height_;
    }

    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

    bool operator==(const BinaryImage&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Per-pixel real-valued threshold raster produced by the adaptive methods.
class ThresholdMap {
public:
    ThresholdMap(int width, int height, double fill = 0.0);
    ThresholdMap(int width, int height, std::vector<double> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    double at(int x, int y) const {
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const ThresholdMap&) const = default;

private:
    int width_;
    int height_;
    std::vector<double> values_;
};

/// 256-bin gray-level histogram. Bins are real-valued so that derived
/// distributions (co-occurrence projections, contrast maps) can be fed to
/// the same threshold selectors as plain pixel counts.
struct Histogram {
    static constexpr int levels = 256;

    std::array<double, levels> bins{};

    double total() const noexcept;
    void add(int level, double weight = 1.0) { bins[level] += weight; }

    bool operator==(const Histogram&) const = default;
};

/// Axis-aligned pixel rectangle, inclusive origin, exclusive extent.
struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    bool operator==(const Rect&) const = default;
};

Histogram histogram(const GrayImage& img);
Histogram histogram(const GrayImage& img, const Rect& region);

} // namespace docbin

#endif
