#include "docbin/degrade.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace docbin {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t draw) {
    return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

GrayImage blur(const GrayImage& img) {
    std::vector<std::uint8_t> out;
    out.reserve(img.pixels().size());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            int sum = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    sum += img.at_clamped(x + dx, y + dy);
                }
            }
            out.push_back(static_cast<std::uint8_t>(std::lround(sum / 9.0)));
        }
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage sharpen(const GrayImage& img) {
    const GrayImage smooth = blur(img);
    std::vector<std::uint8_t> out;
    out.reserve(img.pixels().size());
    for (std::size_t i = 0; i < img.pixels().size(); ++i) {
        const int v = 2 * img.pixels()[i] - smooth.pixels()[i];
        out.push_back(static_cast<std::uint8_t>(std::clamp(v, 0, 255)));
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage salt_pepper(const GrayImage& img, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("salt_pepper: density must be in [0, 1]");
    }
    std::vector<std::uint8_t> out;
    out.reserve(img.pixels().size());
    for (std::size_t i = 0; i < img.pixels().size(); ++i) {
        const double u = uniform01(splitmix64_at(seed, i));
        if (u < p / 2.0) {
            out.push_back(0);
        } else if (u < p) {
            out.push_back(255);
        } else {
            out.push_back(img.pixels()[i]);
        }
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage apply_recipe(const GrayImage& img, const DegradeRecipe& recipe) {
    GrayImage out = img;
    for (const DegradeOp op : recipe.ops) {
        switch (op) {
        case DegradeOp::blur:
            out = blur(out);
            break;
        case DegradeOp::sharpen:
            out = sharpen(out);
            break;
        case DegradeOp::noise:
            out = salt_pepper(out, recipe.p, recipe.seed);
            break;
        }
    }
    return out;
}

std::string recipe_to_string(const DegradeRecipe& recipe) {
    if (recipe.ops.empty()) {
        return "original";
    }
    std::string s;
    for (const DegradeOp op : recipe.ops) {
        if (!s.empty()) {
            s += '+';
        }
        switch (op) {
        case DegradeOp::blur:
            s += "blur";
            break;
        case DegradeOp::sharpen:
            s += "sharpen";
            break;
        case DegradeOp::noise: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "noise(%g)", recipe.p);
            s += buf;
            break;
        }
        }
    }
    return s;
}

namespace {

struct Category {
    const char* slug;
    std::vector<DegradeOp> ops;
    int count;
};

const std::vector<Category>& categories() {
    static const std::vector<Category> table = {
        {"original", {}, 20},
        {"blur", {DegradeOp::blur}, 20},
        {"sharpen", {DegradeOp::sharpen}, 20},
        {"noise", {DegradeOp::noise}, 20},
        {"blur-noise", {DegradeOp::blur, DegradeOp::noise}, 40},
        {"sharpen-noise", {DegradeOp::sharpen, DegradeOp::noise}, 40},
        {"blur-noise-sharpen", {DegradeOp::blur, DegradeOp::noise, DegradeOp::sharpen}, 10},
    };
    return table;
}

} // namespace

DatasetManifest plan_dataset(const std::vector<std::string>& source_names,
                             std::uint64_t seed, double p) {
    if (source_names.size() < 20) {
        throw std::invalid_argument("plan_dataset: need at least 20 source images, got " +
                                    std::to_string(source_names.size()));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("plan_dataset: density must be in [0, 1]");
    }
    DatasetManifest manifest;
    std::size_t index = 0;
    for (const Category& cat : categories()) {
        manifest.category_counts[cat.slug] = cat.count;
        for (int i = 0; i < cat.count; ++i, ++index) {
            DatasetEntry entry;
            char name[64];
            std::snprintf(name, sizeof(name), "img_%03zu_%s.pgm", index, cat.slug);
            entry.output_name = name;
            entry.source_name = source_names[index % source_names.size()];
            entry.category = cat.slug;
            entry.recipe.ops = cat.ops;
            entry.recipe.seed = splitmix64_at(seed, index);
            entry.recipe.p = p;
            manifest.entries.push_back(std::move(entry));
        }
    }
    return manifest;
}

std::string format_manifest(const DatasetManifest& manifest) {
    std::string out;
    for (const DatasetEntry& e : manifest.entries) {
        out += e.output_name;
        out += '\t';
        out += e.source_name;
        out += '\t';
        out += recipe_to_string(e.recipe);
        out += '\t';
        out += std::to_string(e.recipe.seed);
        out += '\n';
    }
    return out;
}

std::pair<std::vector<GrayImage>, DatasetManifest>
generate_dataset(const std::vector<SourceImage>& sources, std::uint64_t seed, double p) {
    std::vector<std::string> names;
    names.reserve(sources.size());
    for (const SourceImage& s : sources) {
        names.push_back(s.name);
    }
    DatasetManifest manifest = plan_dataset(names, seed, p);

    std::vector<GrayImage> images;
    images.reserve(manifest.entries.size());
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
        const GrayImage& src = sources[i % sources.size()].image;
        images.push_back(apply_recipe(src, manifest.entries[i].recipe));
    }
    return {std::move(images), std::move(manifest)};
}

} // namespace docbin
