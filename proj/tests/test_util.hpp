#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "bevnav/costgrid.hpp"
#include "bevnav/homography.hpp"

namespace bevnav::test {

inline std::filesystem::path fixture_dir() { return BEVNAV_FIXTURE_DIR; }

// Fresh scratch directory under the build tree, wiped on every use.
inline std::filesystem::path temp_dir(const std::string& name) {
    const std::filesystem::path dir = std::filesystem::path(BEVNAV_TEST_TMP) / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// Quad with no near-collinear triple, suitable for homography estimation.
inline std::array<Point, 4> random_quad(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> coord(lo, hi);
    const double min_area = 0.01 * (hi - lo) * (hi - lo);
    while (true) {
        std::array<Point, 4> pts;
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            for (int j = i + 1; j < 4 && ok; ++j) {
                for (int k = j + 1; k < 4 && ok; ++k) {
                    const double cross = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                                         (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                    if (std::abs(cross) < 2.0 * min_area) ok = false;
                }
            }
        }
        if (ok) return pts;
    }
}

inline Correspondences random_correspondences(std::mt19937& rng) {
    Correspondences c;
    c.src = random_quad(rng, 0.0, 640.0);
    c.dst = random_quad(rng, 0.0, 2000.0);
    return c;
}

inline CostGrid random_grid(std::mt19937& rng, int rows, int cols) {
    static constexpr double kCosts[] = {1.0, 4.0, 16.0, 64.0};
    std::uniform_int_distribution<int> pick(0, 3);
    CostGrid grid;
    grid.spec.rows = rows;
    grid.spec.cols = cols;
    grid.cells.resize(static_cast<std::size_t>(rows) * cols);
    for (double& v : grid.cells) v = kCosts[pick(rng)];
    return grid;
}

}  // namespace bevnav::test
