#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "docbin/sauvola.hpp"

namespace {

docbin::GrayImage make_test_image(int width, int height) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(level(rng));
    }
    return docbin::GrayImage(width, height, std::move(px));
}

void BM_sauvola_naive(benchmark::State& state) {
    const docbin::GrayImage img = make_test_image(512, 512);
    docbin::SauvolaParams params;
    params.window = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(docbin::binarize_sauvola_naive(img, params));
    }
    state.SetItemsProcessed(state.iterations() * img.pixel_count());
}

void BM_sauvola_fast(benchmark::State& state) {
    const docbin::GrayImage img = make_test_image(512, 512);
    docbin::SauvolaParams params;
    params.window = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(docbin::binarize_sauvola_fast(img, params));
    }
    state.SetItemsProcessed(state.iterations() * img.pixel_count());
}

} // namespace

BENCHMARK(BM_sauvola_naive)->Arg(3)->Arg(7)->Arg(15)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sauvola_fast)->Arg(3)->Arg(7)->Arg(15)->Arg(31)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
