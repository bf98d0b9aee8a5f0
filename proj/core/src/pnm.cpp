#include "docbin/pnm.hpp"

#include <cstdio>
#include <limits>

namespace docbin {

namespace {

constexpr std::int64_t max_pixel_count = std::int64_t{1} << 30;

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) {
    return c >= '0' && c <= '9';
}

/// Header scanner: whitespace-separated decimal tokens, '#' starts a comment
/// running to end of line.
class TokenReader {
public:
    explicit TokenReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::int64_t read_uint(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) {
            throw PnmParseError(std::string("unexpected end of input reading ") + what);
        }
        if (!is_digit(bytes_[pos_])) {
            throw PnmParseError(std::string("expected ") + what);
        }
        std::int64_t value = 0;
        while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw PnmParseError(std::string(what) + " out of range");
            }
            ++pos_;
        }
        return value;
    }

    // The header's final field is terminated by exactly one whitespace byte
    // before the raw payload; a comment there would be payload data.
    void consume_single_space() {
        if (pos_ >= bytes_.size() || !is_pnm_space(bytes_[pos_])) {
            throw PnmParseError("missing separator before pixel data");
        }
        ++pos_;
    }

    std::span<const std::uint8_t> remaining() const { return bytes_.subspan(pos_); }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (is_pnm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

char magic_letter(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw PnmParseError("bad magic number");
    }
    return static_cast<char>(bytes[1]);
}

struct Extent {
    int width = 0;
    int height = 0;
};

Extent read_extent(TokenReader& in) {
    Extent e;
    e.width = static_cast<int>(in.read_uint("width"));
    e.height = static_cast<int>(in.read_uint("height"));
    if (e.width == 0 || e.height == 0) {
        throw PnmParseError("zero image dimension");
    }
    if (static_cast<std::int64_t>(e.width) * e.height > max_pixel_count) {
        throw PnmParseError("image dimensions too large");
    }
    return e;
}

} // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
    const char format = magic_letter(bytes);
    if (format != '2' && format != '5') {
        throw PnmParseError("bad magic number: not a P2/P5 PGM");
    }
    TokenReader in(bytes.subspan(2));

    const Extent extent = read_extent(in);
    const int maxval = static_cast<int>(in.read_uint("maxval"));
    if (maxval < 1 || maxval > 255) {
        throw PnmParseError("maxval out of range (must be 1..255)");
    }

    const std::size_t count = static_cast<std::size_t>(extent.width) * extent.height;
    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);

    if (format == '5') {
        in.consume_single_space();
        const auto payload = in.remaining();
        if (payload.size() < count) {
            throw PnmParseError("truncated pixel data");
        }
        for (std::size_t i = 0; i < count; ++i) {
            if (payload[i] > maxval) {
                throw PnmParseError("sample exceeds maxval");
            }
            pixels.push_back(payload[i]);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::int64_t v = in.read_uint("sample");
            if (v > maxval) {
                throw PnmParseError("sample exceeds maxval");
            }
            pixels.push_back(static_cast<std::uint8_t>(v));
        }
    }

    return GrayImage(extent.width, extent.height, std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    char header[64];
    const int n = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n",
                                img.width(), img.height());
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) + img.pixels().size());
    out.insert(out.end(), header, header + n);
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

std::vector<std::uint8_t> save_pbm(const BinaryImage& bin) {
    char header[64];
    const int n = std::snprintf(header, sizeof(header), "P4\n%d %d\n",
                                bin.width(), bin.height());
    const int row_bytes = (bin.width() + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) +
                static_cast<std::size_t>(row_bytes) * bin.height());
    out.insert(out.end(), header, header + n);
    for (int y = 0; y < bin.height(); ++y) {
        for (int b = 0; b < row_bytes; ++b) {
            std::uint8_t packed = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const int x = b * 8 + bit;
                if (x < bin.width() && bin.at(x, y) != 0) {
                    packed |= static_cast<std::uint8_t>(0x80u >> bit);
                }
            }
            out.push_back(packed);
        }
    }
    return out;
}

BinaryImage load_pbm(std::span<const std::uint8_t> bytes) {
    if (magic_letter(bytes) != '4') {
        throw PnmParseError("bad magic number: not a P4 PBM");
    }
    TokenReader in(bytes.subspan(2));

    const Extent extent = read_extent(in);
    in.consume_single_space();

    const auto payload = in.remaining();
    const int row_bytes = (extent.width + 7) / 8;
    const std::size_t needed = static_cast<std::size_t>(row_bytes) * extent.height;
    if (payload.size() < needed) {
        throw PnmParseError("truncated pixel data");
    }

    std::vector<std::uint8_t> pixels;
    pixels.reserve(static_cast<std::size_t>(extent.width) * extent.height);
    for (int y = 0; y < extent.height; ++y) {
        for (int x = 0; x < extent.width; ++x) {
            const std::uint8_t packed =
                payload[static_cast<std::size_t>(y) * row_bytes + x / 8];
            pixels.push_back((packed >> (7 - x % 8)) & 1u);
        }
    }
    return BinaryImage(extent.width, extent.height, std::move(pixels));
}

} // namespace docbin
