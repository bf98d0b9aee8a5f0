#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "docbin/bernsen.hpp"
#include "docbin/cooccur.hpp"
#include "docbin/degrade.hpp"
#include "docbin/otsu.hpp"
#include "docbin/pnm.hpp"
#include "docbin/sauvola.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

struct BinarizeOptions {
    std::string input;
    std::string output;
    std::string method = "otsu";
    int window = 0; // 0 = method default
    double k = 0.5;
    double r = 128.0;
    int d = 3;
    std::string grid = "3x3";
};

std::pair<int, int> parse_grid(const std::string& arg) {
    int rows = 0, cols = 0;
    char trailing = 0;
    if (std::sscanf(arg.c_str(), "%dx%d%c", &rows, &cols, &trailing) != 2 ||
        rows < 1 || cols < 1) {
        throw std::runtime_error("bad grid '" + arg + "', expected RxC");
    }
    return {rows, cols};
}

int run_binarize(const BinarizeOptions& opt) {
    const docbin::GrayImage img = docbin::load_pgm(read_file(opt.input));
    docbin::BinaryImage out(1, 1, 0);

    if (opt.method == "otsu") {
        const int t = docbin::otsu_threshold(docbin::histogram(img)).threshold;
        std::printf("%d\n", t);
        out = docbin::binarize_global(img, t);
    } else if (opt.method == "otsu-local") {
        const auto [rows, cols] = parse_grid(opt.grid);
        const auto results = docbin::local_otsu_results(img, rows, cols);
        for (std::size_t i = 0; i < results.size(); ++i) {
            std::printf("%s%d", i ? " " : "", results[i].threshold);
        }
        std::printf("\n");
        out = docbin::binarize_otsu_local(img, rows, cols);
    } else if (opt.method == "sauvola" || opt.method == "sauvola-fast") {
        docbin::SauvolaParams params;
        params.window = opt.window ? opt.window : 15;
        params.k = opt.k;
        params.r = opt.r;
        out = opt.method == "sauvola" ? docbin::binarize_sauvola_naive(img, params).binary
                                      : docbin::binarize_sauvola_fast(img, params).binary;
    } else if (opt.method == "bernsen") {
        out = docbin::bernsen_binarize(img, opt.window ? opt.window : 31,
                                       docbin::BernsenVariant::original);
    } else if (opt.method == "bernsen-mod") {
        out = docbin::bernsen_binarize(img, opt.window ? opt.window : 31,
                                       docbin::BernsenVariant::modified);
    } else if (opt.method == "cooccur") {
        const int t = docbin::cooccurrence_threshold(img, opt.d).threshold;
        std::printf("%d\n", t);
        out = docbin::binarize_global(img, t);
    } else {
        throw std::runtime_error("unknown method " + opt.method);
    }

    write_file(opt.output, docbin::save_pbm(out));
    return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path) {
    const docbin::BinaryImage a = docbin::load_pbm(read_file(a_path));
    const docbin::BinaryImage b = docbin::load_pbm(read_file(b_path));
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::runtime_error("dimension mismatch: " + std::to_string(a.width()) + "x" +
                                 std::to_string(a.height()) + " vs " +
                                 std::to_string(b.width()) + "x" + std::to_string(b.height()));
    }
    std::int64_t same = 0;
    for (std::size_t i = 0; i < a.pixels().size(); ++i) {
        same += a.pixels()[i] == b.pixels()[i];
    }
    std::printf("%.6f\n", static_cast<double>(same) / static_cast<double>(a.pixel_count()));
    return 0;
}

int run_degrade(const std::string& input_dir, const std::string& output_dir,
                std::uint64_t seed, double density) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(input_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());

    std::vector<docbin::SourceImage> sources;
    sources.reserve(paths.size());
    for (const fs::path& p : paths) {
        sources.push_back({p.filename().string(), docbin::load_pgm(read_file(p))});
    }

    // Throws before anything is written when there are too few sources.
    auto [images, manifest] = docbin::generate_dataset(sources, seed, density);

    fs::create_directories(output_dir);
    for (std::size_t i = 0; i < images.size(); ++i) {
        write_file(fs::path(output_dir) / manifest.entries[i].output_name,
                   docbin::save_pgm(images[i]));
    }
    const std::string text = docbin::format_manifest(manifest);
    write_file(fs::path(output_dir) / "manifest.tsv",
               std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    return 0;
}

template <typename F>
double min_seconds(F&& run, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

int run_bench(const std::string& input, const std::vector<int>& windows, int reps) {
    const docbin::GrayImage img = docbin::load_pgm(read_file(input));
    for (const int w : windows) {
        if (w < 1 || w % 2 == 0) {
            throw std::runtime_error("window sizes must be odd and positive");
        }
    }

    std::printf("window,naive_s,fast_s,speedup,exact\n");
    for (const int w : windows) {
        docbin::SauvolaParams params;
        params.window = w;

        const docbin::SauvolaResult naive = docbin::binarize_sauvola_naive(img, params);
        const docbin::SauvolaResult fast = docbin::binarize_sauvola_fast(img, params);
        const bool exact =
            naive.binary == fast.binary &&
            std::equal(naive.thresholds.values().begin(), naive.thresholds.values().end(),
                       fast.thresholds.values().begin());
        if (!exact) {
            std::fprintf(stderr, "fast Sauvola diverges from naive at window %d\n", w);
            return 1;
        }

        const double naive_s =
            min_seconds([&] { (void)docbin::binarize_sauvola_naive(img, params); }, reps);
        const double fast_s =
            min_seconds([&] { (void)docbin::binarize_sauvola_fast(img, params); }, reps);
        std::printf("%d,%.6f,%.6f,%.2f,true\n", w, naive_s, fast_s,
                    naive_s / std::max(fast_s, 1e-12));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Document image binarization toolkit"};
    app.require_subcommand(1);

    BinarizeOptions bin_opt;
    CLI::App* bin = app.add_subcommand("binarize", "Threshold a PGM image into a PBM");
    bin->add_option("input", bin_opt.input, "Input PGM")->required();
    bin->add_option("output", bin_opt.output, "Output PBM")->required();
    bin->add_option("--method", bin_opt.method, "Thresholding method")
        ->check(CLI::IsMember({"otsu", "otsu-local", "sauvola", "sauvola-fast", "bernsen",
                               "bernsen-mod", "cooccur"}));
    bin->add_option("--window", bin_opt.window,
                    "Window side length (default 15 for sauvola, 31 for bernsen)");
    bin->add_option("--k", bin_opt.k, "Sauvola k");
    bin->add_option("--r", bin_opt.r, "Sauvola dynamic range R");
    bin->add_option("--d", bin_opt.d, "Co-occurrence pair spacing");
    bin->add_option("--grid", bin_opt.grid, "Local-Otsu grid as RxC");

    std::string cmp_a, cmp_b;
    CLI::App* cmp = app.add_subcommand("compare", "Print the matching-pixel fraction of two PBMs");
    cmp->add_option("a", cmp_a, "First PBM")->required();
    cmp->add_option("b", cmp_b, "Second PBM")->required();

    std::string deg_in, deg_out;
    std::uint64_t deg_seed = 0;
    double deg_density = 0.05;
    CLI::App* deg = app.add_subcommand("degrade", "Build the 170-image degraded corpus");
    deg->add_option("input-dir", deg_in, "Directory with 20+ source PGMs")->required();
    deg->add_option("output-dir", deg_out, "Output directory")->required();
    deg->add_option("--seed", deg_seed, "Corpus seed");
    deg->add_option("--density", deg_density, "Salt-and-pepper density");

    std::string bench_input;
    std::vector<int> bench_windows{7, 15, 31};
    int bench_reps = 3;
    CLI::App* bench = app.add_subcommand("bench", "Time naive vs fast Sauvola, CSV on stdout");
    bench->add_option("input", bench_input, "Input PGM")->required();
    bench->add_option("--windows", bench_windows, "Window sizes")->delimiter(',');
    bench->add_option("--reps", bench_reps, "Repetitions per timing (min taken)")
        ->check(CLI::Range(1, 100));

    CLI11_PARSE(app, argc, argv);

    try {
        if (bin->parsed()) {
            return run_binarize(bin_opt);
        }
        if (cmp->parsed()) {
            return run_compare(cmp_a, cmp_b);
        }
        if (deg->parsed()) {
            return run_degrade(deg_in, deg_out, deg_seed, deg_density);
        }
        if (bench->parsed()) {
            return run_bench(bench_input, bench_windows, bench_reps);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "docbin: %s\n", e.what());
        return 1;
    }
    return 0;
}
