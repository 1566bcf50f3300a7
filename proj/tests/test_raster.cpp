#include <doctest.h>

#include <random>

#include "bevnav/errors.hpp"
#include "bevnav/png_io.hpp"
#include "bevnav/raster.hpp"
#include "test_util.hpp"

using namespace bevnav;

TEST_CASE("label png round trip is byte identical") {
    const auto dir = test::temp_dir("raster_roundtrip");

    LabelImage all_zero = LabelImage::filled(4, 4, 0);
    save_label_png(all_zero, (dir / "zero.png").string());
    const LabelImage zero_back = load_label_png((dir / "zero.png").string());
    CHECK(zero_back.width == 4);
    CHECK(zero_back.height == 4);
    CHECK(zero_back.data == all_zero.data);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    LabelImage random_img = LabelImage::filled(64, 64, 0);
    for (auto& v : random_img.data) v = static_cast<std::uint8_t>(byte(rng));
    save_label_png(random_img, (dir / "random.png").string());
    const LabelImage random_back = load_label_png((dir / "random.png").string());
    CHECK(random_back.width == 64);
    CHECK(random_back.height == 64);
    CHECK(random_back.data == random_img.data);
}

TEST_CASE("label png decode matches an independently encoded reference") {
    // gradient_2x2.png was written by a different encoder with pixel values
    // 0,1,2,3 in row-major order.
    const LabelImage img = load_label_png((test::fixture_dir() / "testdata/gradient_2x2.png").string());
    REQUIRE(img.width == 2);
    REQUIRE(img.height == 2);
    CHECK(img.data == std::vector<std::uint8_t>{0, 1, 2, 3});
}

TEST_CASE("label png loader rejects non 8-bit single-channel input") {
    CHECK_THROWS_AS(load_label_png((test::fixture_dir() / "testdata/rgb_4x4.png").string()), Error);
    CHECK_THROWS_AS(load_label_png((test::fixture_dir() / "testdata/gray16_4x4.png").string()), Error);
    CHECK_THROWS_AS(load_label_png((test::fixture_dir() / "testdata/palette_2x2.png").string()), Error);
    CHECK_THROWS_AS(load_label_png("/nonexistent/file.png"), Error);
}

TEST_CASE("color png io round trips and validates") {
    const auto dir = test::temp_dir("raster_color");
    ColorImage frame;
    frame.width = 3;
    frame.height = 2;
    frame.data = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18};
    save_color_png(frame, (dir / "frame.png").string());
    const ColorImage back = load_color_png((dir / "frame.png").string());
    CHECK(back.data == frame.data);
    // label PNGs are not acceptable color frames
    CHECK_THROWS_AS(load_color_png((test::fixture_dir() / "testdata/gradient_2x2.png").string()), Error);
}

TEST_CASE("crop extracts the mapped block") {
    LabelImage img = LabelImage::filled(4, 4, 0);
    for (int y = 0; y < 4; ++y) {
        for (int x = 0; x < 4; ++x) img.at(x, y) = static_cast<std::uint8_t>(y * 4 + x);
    }

    SUBCASE("full-image rect is the identity") {
        const LabelImage out = crop(img, {0, 0, 4, 4});
        CHECK(out.data == img.data);
    }
    SUBCASE("center 2x2 block") {
        const LabelImage out = crop(img, {1, 1, 2, 2});
        CHECK(out.data == std::vector<std::uint8_t>{5, 6, 9, 10});
    }
    SUBCASE("out-of-bounds rect is rejected") {
        CHECK_THROWS_AS(crop(img, {2, 2, 3, 3}), Error);
        CHECK_THROWS_AS(crop(img, {-1, 0, 2, 2}), Error);
        CHECK_THROWS_AS(crop(img, {0, 0, 0, 2}), Error);
    }
}

TEST_CASE("crop of a random image matches per-pixel indexing") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> byte(0, 255);
    LabelImage img = LabelImage::filled(100, 80, 0);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(byte(rng));

    std::uniform_int_distribution<int> rx(0, 60), ry(0, 40), rw(1, 40), rh(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
        const CropRect rect{rx(rng), ry(rng), rw(rng), rh(rng)};
        const LabelImage out = crop(img, rect);
        for (int y = 0; y < rect.height; ++y) {
            for (int x = 0; x < rect.width; ++x) {
                REQUIRE(out.at(x, y) == img.at(rect.x + x, rect.y + y));
            }
        }
    }
}

TEST_CASE("composing two crops equals one crop of the composed rectangle") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> byte(0, 255);
    LabelImage img = LabelImage::filled(50, 40, 0);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(byte(rng));

    const CropRect outer{5, 4, 30, 28};
    const CropRect inner{3, 2, 10, 12};
    const LabelImage two_step = crop(crop(img, outer), inner);
    const LabelImage one_step = crop(img, {outer.x + inner.x, outer.y + inner.y, inner.width, inner.height});
    CHECK(two_step.data == one_step.data);
}
