#ifndef DOCBIN_PNM_HPP
#define DOCBIN_PNM_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "docbin/image.hpp"

namespace docbin {

/// Raised for any malformed PGM/PBM input. The message names the defect
/// (bad magic, zero dimension, maxval out of range, truncated payload, ...).
class PnmParseError : public std::runtime_error {
public:
    explicit PnmParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a PGM file (binary P5 or ASCII P2, maxval <= 255). Header comments
/// starting with '#' are skipped. Sample values are stored as-is.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Emits binary P5 with maxval 255. load_pgm(save_pgm(img)) == img exactly.
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

/// Emits binary P4. Bit 1 encodes foreground (PBM: 1 = black); rows are
/// padded to a byte boundary with 0 bits, most significant bit first.
std::vector<std::uint8_t> save_pbm(const BinaryImage& bin);

/// Parses a binary P4 file back into a BinaryImage.
BinaryImage load_pbm(std::span<const std::uint8_t> bytes);

} // namespace docbin

#endif
