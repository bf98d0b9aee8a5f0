#include "doctest.h"

#include <stdexcept>

#include "docbin/otsu.hpp"

#include "support.hpp"

using docbin::GrayImage;
using docbin::Histogram;
using docbin::OtsuResult;
using docbin::Rect;

TEST_CASE("two balanced levels split exactly between them") {
    Histogram h;
    h.add(50, 3.0);
    h.add(200, 3.0);
    const OtsuResult r = docbin::otsu_threshold(h);
    CHECK(r.threshold == 50);
    CHECK(r.sigma_b == doctest::Approx(5625.0).epsilon(1e-12));
    CHECK(r.sigma_t == doctest::Approx(5625.0).epsilon(1e-12));
    CHECK(r.eta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ties on a plateau go to the smallest threshold") {
    Histogram h;
    h.add(10, 5.0);
    h.add(200, 5.0);
    // Every split from 10 through 199 produces the same two classes.
    CHECK(docbin::otsu_threshold(h).threshold == 10);
}

TEST_CASE("single-level histogram degenerates to that level") {
    Histogram h;
    h.add(77, 123.0);
    const OtsuResult r = docbin::otsu_threshold(h);
    CHECK(r.threshold == 77);
    CHECK(r.sigma_b == 0.0);
    CHECK(r.sigma_t == 0.0);
    CHECK(r.eta == 0.0);
}

TEST_CASE("empty histogram is rejected") {
    CHECK_THROWS_AS(docbin::otsu_threshold(Histogram{}), std::invalid_argument);
}

TEST_CASE("class moments sum and average correctly") {
    Histogram h;
    h.add(10, 2.0);
    h.add(20, 2.0);
    h.add(30, 4.0);
    const docbin::ClassMoments cm = docbin::class_moments(h, 20);
    CHECK(cm.weight0 == 4.0);
    CHECK(cm.mean0 == doctest::Approx(15.0));
    CHECK(cm.weight1 == 4.0);
    CHECK(cm.mean1 == doctest::Approx(30.0));

    const docbin::ClassMoments lop = docbin::class_moments(h, 255);
    CHECK(lop.weight1 == 0.0);
    CHECK(lop.mean1 == 0.0);
    CHECK_THROWS_AS(docbin::class_moments(h, -1), std::invalid_argument);
    CHECK_THROWS_AS(docbin::class_moments(h, 256), std::invalid_argument);
}

TEST_CASE("threshold matches the exhaustive reference on random histograms") {
    testsupport::Rng rng(41);
    std::uniform_int_distribution<int> support(1, 256);
    for (int trial = 0; trial < 300; ++trial) {
        const Histogram h = testsupport::random_histogram(rng, support(rng));
        const OtsuResult r = docbin::otsu_threshold(h);
        CHECK(r.threshold == testsupport::oracle_otsu_threshold(h));
        CHECK(r.eta >= 0.0);
        CHECK(r.eta <= 1.0);
        CHECK(r.sigma_b <= r.sigma_t + 1e-6);
    }
}

TEST_CASE("every two-point histogram separates perfectly") {
    testsupport::Rng rng(43);
    std::uniform_int_distribution<int> weight(1, 1000);
    for (int trial = 0; trial < 500; ++trial) {
        const int a = static_cast<int>(rng() % 255);
        const int b = a + 1 + static_cast<int>(rng() % (255 - a));
        Histogram h;
        h.add(a, weight(rng));
        h.add(b, weight(rng));
        const OtsuResult r = docbin::otsu_threshold(h);
        CHECK(r.threshold == a);
        CHECK(r.eta == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("binarize_global marks pixels at or below the threshold") {
    const GrayImage img(4, 1, std::vector<std::uint8_t>{0, 100, 101, 255});
    const auto bin = docbin::binarize_global(img, 100);
    CHECK(bin.pixels()[0] == 1);
    CHECK(bin.pixels()[1] == 1);
    CHECK(bin.pixels()[2] == 0);
    CHECK(bin.pixels()[3] == 0);
    CHECK_THROWS_AS(docbin::binarize_global(img, -1), std::invalid_argument);
    CHECK_THROWS_AS(docbin::binarize_global(img, 256), std::invalid_argument);
}

TEST_CASE("two-tone page is recovered exactly") {
    const auto page = testsupport::text_page(120, 96);
    CHECK(docbin::binarize_otsu(page.image) == page.mask);
}

TEST_CASE("grid partition covers the image with remainders in the last cells") {
    const docbin::WindowGrid grid = docbin::make_grid(10, 10, 3, 3);
    REQUIRE(grid.cells.size() == 9);
    CHECK(grid.cells[0] == Rect{0, 0, 3, 3});
    CHECK(grid.cells[2] == Rect{6, 0, 4, 3});
    CHECK(grid.cells[8] == Rect{6, 6, 4, 4});

    std::int64_t area = 0;
    for (const Rect& c : grid.cells) {
        area += static_cast<std::int64_t>(c.width) * c.height;
    }
    CHECK(area == 100);

    CHECK(docbin::make_grid(7, 5, 1, 1).cells[0] == Rect{0, 0, 7, 5});
    CHECK_THROWS_AS(docbin::make_grid(4, 4, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(docbin::make_grid(4, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("local thresholds come out in row-major cell order") {
    // Quadrants with distinct two-tone pairs; each cell thresholds at its
    // own lower level.
    std::vector<std::uint8_t> px(16 * 16);
    for (int y = 0; y < 16; ++y) {
        for (int x = 0; x < 16; ++x) {
            const int quadrant = (y / 8) * 2 + (x / 8);
            const int lo = 10 + 20 * quadrant;
            px[static_cast<std::size_t>(y) * 16 + x] =
                static_cast<std::uint8_t>((x + y) % 2 ? lo : lo + 100);
        }
    }
    const GrayImage img(16, 16, std::move(px));
    const auto results = docbin::local_otsu_results(img, 2, 2);
    REQUIRE(results.size() == 4);
    CHECK(results[0].threshold == 10);
    CHECK(results[1].threshold == 30);
    CHECK(results[2].threshold == 50);
    CHECK(results[3].threshold == 70);
}

TEST_CASE("1x1 local grid reduces to the global threshold") {
    testsupport::Rng rng(47);
    const GrayImage img = testsupport::random_image(rng, 53, 29);
    CHECK(docbin::binarize_otsu_local(img, 1, 1) == docbin::binarize_otsu(img));
}

TEST_CASE("local binarization recovers a clean page per cell") {
    const auto page = testsupport::text_page(144, 144);
    CHECK(docbin::binarize_otsu_local(page.image, 3, 3) == page.mask);
}
