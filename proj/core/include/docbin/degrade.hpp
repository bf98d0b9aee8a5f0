#ifndef DOCBIN_DEGRADE_HPP
#define DOCBIN_DEGRADE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "docbin/image.hpp"

namespace docbin {

/// i-th draw of the splitmix64 stream for `seed`. Pure function of
/// (seed, i), so consumers may draw in any traversal order.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i);

/// Maps a draw onto [0, 1) with 53 uniform bits.
double uniform01(std::uint64_t draw);

/// 3x3 box filter, edge replicated, each output rounded to nearest.
GrayImage blur(const GrayImage& img);

/// Unsharp mask: clamp(2 f - blur(f)) per pixel.
GrayImage sharpen(const GrayImage& img);

/// Each pixel independently becomes 0 with probability p/2, 255 with
/// probability p/2, else keeps its value. Deterministic in (seed, position).
GrayImage salt_pepper(const GrayImage& img, double p, std::uint64_t seed);

enum class DegradeOp { blur, sharpen, noise };

/// Ordered degradation steps plus the noise parameters they draw on.
/// The same recipe applied to the same image always gives the same bytes.
struct DegradeRecipe {
    std::vector<DegradeOp> ops;
    std::uint64_t seed = 0;
    double p = 0.05;
};

GrayImage apply_recipe(const GrayImage& img, const DegradeRecipe& recipe);

/// "original", or ops joined with '+', noise carrying its density:
/// "blur+noise(0.05)+sharpen".
std::string recipe_to_string(const DegradeRecipe& recipe);

struct DatasetEntry {
    std::string output_name;
    std::string source_name;
    std::string category;
    DegradeRecipe recipe;
};

struct DatasetManifest {
    std::vector<DatasetEntry> entries;
    std::map<std::string, int> category_counts;
};

/// Plans the 170-entry corpus: categories original/blur/sharpen/noise x20,
/// blur-noise/sharpen-noise x40, blur-noise-sharpen x10, in that order.
/// Sources rotate round-robin; each entry gets its own seed derived from
/// the corpus seed and entry index. Requires at least 20 sources.
DatasetManifest plan_dataset(const std::vector<std::string>& source_names,
                             std::uint64_t seed, double p = 0.05);

/// One line per entry: output, source, recipe, seed, tab-separated.
std::string format_manifest(const DatasetManifest& manifest);

struct SourceImage {
    std::string name;
    GrayImage image;
};

/// Renders the planned corpus. Output images align index-for-index with
/// manifest.entries.
std::pair<std::vector<GrayImage>, DatasetManifest>
generate_dataset(const std::vector<SourceImage>& sources, std::uint64_t seed,
                 double p = 0.05);

} // namespace docbin

#endif
