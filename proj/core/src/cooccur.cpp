#include "docbin/cooccur.hpp"

#include <stdexcept>

namespace docbin {

double CooccurrenceMatrix::mass() const noexcept {
    double sum = 0.0;
    for (const double c : cells) {
        sum += c;
    }
    return sum;
}

CooccurrenceMatrix cooccurrence_matrix(const GrayImage& img, int d, PairDirection direction) {
    if (d < 1) {
        throw std::invalid_argument("cooccurrence_matrix: spacing must be >= 1");
    }
    const int span = direction == PairDirection::deg0 ? img.width() : img.height();
    if (span <= d) {
        throw std::invalid_argument("cooccurrence_matrix: image too small along the sampled direction");
    }

    CooccurrenceMatrix m;
    m.spacing = d;
    m.direction = direction;
    if (direction == PairDirection::deg0) {
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x + d < img.width(); ++x) {
                m.at(img.at(x, y), img.at(x + d, y)) += 1.0;
            }
        }
    } else {
        for (int y = 0; y + d < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                m.at(img.at(x, y), img.at(x, y + d)) += 1.0;
            }
        }
    }
    return m;
}

CooccurrenceMatrix average_matrices(const CooccurrenceMatrix& a, const CooccurrenceMatrix& b) {
    if (a.cells.size() != b.cells.size()) {
        throw std::invalid_argument("average_matrices: dimension mismatch");
    }
    CooccurrenceMatrix avg;
    avg.spacing = a.spacing;
    avg.direction = a.direction == b.direction ? a.direction : std::nullopt;
    for (std::size_t i = 0; i < avg.cells.size(); ++i) {
        avg.cells[i] = (a.cells[i] + b.cells[i]) / 2.0;
    }
    return avg;
}

Histogram diagonal_projection_histogram(const CooccurrenceMatrix& m) {
    Histogram h;
    for (int i = 0; i < CooccurrenceMatrix::levels; ++i) {
        for (int j = 0; j < CooccurrenceMatrix::levels; ++j) {
            h.bins[(i + j + 1) / 2] += m.at(i, j);
        }
    }
    return h;
}

OtsuResult cooccurrence_threshold(const GrayImage& img, int d) {
    const CooccurrenceMatrix horizontal = cooccurrence_matrix(img, d, PairDirection::deg0);
    const CooccurrenceMatrix vertical = cooccurrence_matrix(img, d, PairDirection::deg90);
    return otsu_threshold(diagonal_projection_histogram(average_matrices(horizontal, vertical)));
}

BinaryImage binarize_cooccurrence(const GrayImage& img, int d) {
    return binarize_global(img, cooccurrence_threshold(img, d).threshold);
}

} // namespace docbin
