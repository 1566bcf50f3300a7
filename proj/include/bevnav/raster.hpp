#pragma once

#include <cstdint>
#include <vector>

namespace bevnav {

// Class id reserved for BEV pixels the camera never observed (warp fill).
inline constexpr std::uint8_t kOutOfViewClass = 255;

// Class-indexed raster, one 8-bit class id per pixel. This is the segmenter
// output as far as this library is concerned; no RGB content is interpreted.
struct LabelImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // row-major, size = width * height

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }

    static LabelImage filled(int width, int height, std::uint8_t value);
};

// Per-pixel scalar traversal cost, either still in the perspective frame or
// already remapped to the metric BEV plane.
struct CostMap {
    enum class Space { perspective, bev };

    int width = 0;
    int height = 0;
    std::vector<double> data;  // row-major, finite, >= 0
    Space space = Space::perspective;

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }

    static CostMap filled(int width, int height, double value, Space space);
};

// 8-bit RGB frame, used only for overlay rendering.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // row-major, 3 bytes per pixel

    std::size_t offset(int x, int y) const { return (static_cast<std::size_t>(y) * width + x) * 3; }
};

struct CropRect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

// Extracts rect from image; throws if the rectangle leaves the image bounds.
LabelImage crop(const LabelImage& image, const CropRect& rect);

// Boundary check used wherever a CostMap enters the pipeline.
void validate_costs(const CostMap& map);

}  // namespace bevnav
