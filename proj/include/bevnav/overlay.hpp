#pragma once

#include <cstdint>

#include "bevnav/homography.hpp"
#include "bevnav/planner.hpp"
#include "bevnav/raster.hpp"

namespace bevnav {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

struct OverlayStyle {
    Rgb path_color{255, 160, 0};
    Rgb start_color{220, 32, 32};  // red marker at the navigation origin
    Rgb goal_color{32, 180, 64};   // green marker at the destination
    int marker_radius_px = 4;
    int line_width_px = 2;
};

// Draws the planned path back onto the perspective frame: each cell's BEV
// center is pulled through invert(h), consecutive centers are joined by
// segments, and every cell gets a filled disc (start and goal in their own
// colors). Rasterization is a naive per-pixel coverage test with no
// antialiasing so outputs stay bit-reproducible; off-frame pixels are clipped
// silently. An empty path returns the frame untouched.
ColorImage render_overlay(const ColorImage& frame, const GridPath& path, const GridSpec& spec,
                          const Homography& h, const OverlayStyle& style = {});

}  // namespace bevnav
