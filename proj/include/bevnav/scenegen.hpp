#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bevnav/homography.hpp"
#include "bevnav/raster.hpp"

namespace bevnav {

// Axis-aligned rectangle in BEV millimeters (= BEV pixels at the 1:1 scale).
struct RectMm {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

struct PaintRegion {
    RectMm rect;
    std::uint8_t class_id = 0;
};

// Synthetic labeled scene with known geometry. Painting order is floor,
// secondary floor, then obstacles, so obstacles win where regions overlap.
// The seed names the scene family; fixture generators derive per-frame
// variations from it.
struct SceneSpec {
    std::uint8_t floor_class = 0;
    std::optional<PaintRegion> secondary_floor;
    std::vector<PaintRegion> obstacles;
    std::uint64_t seed = 0;
};

LabelImage generate_bev_labels(const SceneSpec& spec, const BevCanvas& canvas);

// Projects BEV ground truth into a synthetic camera view by warping through
// invert(h); feeding the result back through the forward pipeline must
// recover the BEV scene on observed pixels.
LabelImage generate_perspective_view(const LabelImage& bev_labels, const Homography& h, int width,
                                     int height);

}  // namespace bevnav
