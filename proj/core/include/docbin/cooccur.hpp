#ifndef DOCBIN_COOCCUR_HPP
#define DOCBIN_COOCCUR_HPP

#include <optional>
#include <vector>

#include "docbin/image.hpp"
#include "docbin/otsu.hpp"

namespace docbin {

/// Sampling direction for gray-level pairs: deg0 walks +x, deg90 walks +y.
enum class PairDirection { deg0, deg90 };

/// 256x256 matrix of ordered gray-level pair weights at a fixed spacing.
/// cells[i][j] counts pairs whose source level is i and destination level j;
/// direction is empty for an averaged matrix.
struct CooccurrenceMatrix {
    static constexpr int levels = Histogram::levels;

    int spacing = 0;
    std::optional<PairDirection> direction;
    std::vector<double> cells = std::vector<double>(
        static_cast<std::size_t>(levels) * levels, 0.0);

    double at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * levels + j];
    }
    double& at(int i, int j) {
        return cells[static_cast<std::size_t>(i) * levels + j];
    }
    double mass() const noexcept;
};

/// Counts every ordered pair (f(x, y), f(x+d, y)) for deg0, or
/// (f(x, y), f(x, y+d)) for deg90. Throws std::invalid_argument when d < 1
/// or the image is too short along the sampled direction for any pair.
CooccurrenceMatrix cooccurrence_matrix(const GrayImage& img, int d, PairDirection direction);

/// Cellwise (a + b) / 2.
CooccurrenceMatrix average_matrices(const CooccurrenceMatrix& a, const CooccurrenceMatrix& b);

/// Folds the matrix onto gray levels: cell (i, j) lands in bin
/// ceil((i + j) / 2). Histogram total equals the matrix mass.
Histogram diagonal_projection_histogram(const CooccurrenceMatrix& m);

/// Otsu over the averaged deg0/deg90 projection at spacing d.
OtsuResult cooccurrence_threshold(const GrayImage& img, int d = 3);

BinaryImage binarize_cooccurrence(const GrayImage& img, int d = 3);

} // namespace docbin

#endif
