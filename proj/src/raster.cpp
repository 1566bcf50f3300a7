#include "bevnav/raster.hpp"

#include <cmath>

#include "bevnav/errors.hpp"

namespace bevnav {

const char* stage_name(Stage stage) {
    switch (stage) {
        case Stage::io: return "io";
        case Stage::config: return "config";
        case Stage::calibration: return "calibration";
        case Stage::warp: return "warp";
        case Stage::cost: return "cost";
        case Stage::grid: return "grid";
        case Stage::plan: return "plan";
        case Stage::eval: return "eval";
        case Stage::render: return "render";
    }
    return "unknown";
}

LabelImage LabelImage::filled(int width, int height, std::uint8_t value) {
    LabelImage out;
    out.width = width;
    out.height = height;
    out.data.assign(static_cast<std::size_t>(width) * height, value);
    return out;
}

CostMap CostMap::filled(int width, int height, double value, Space space) {
    CostMap out;
    out.width = width;
    out.height = height;
    out.data.assign(static_cast<std::size_t>(width) * height, value);
    out.space = space;
    return out;
}

LabelImage crop(const LabelImage& image, const CropRect& rect) {
    if (rect.width <= 0 || rect.height <= 0) {
        throw Error(Stage::io, "crop rectangle has non-positive size");
    }
    if (rect.x < 0 || rect.y < 0 || rect.x + rect.width > image.width ||
        rect.y + rect.height > image.height) {
        throw Error(Stage::io, "crop rectangle leaves the image bounds");
    }
    LabelImage out;
    out.width = rect.width;
    out.height = rect.height;
    out.data.resize(static_cast<std::size_t>(rect.width) * rect.height);
    for (int y = 0; y < rect.height; ++y) {
        const std::uint8_t* src = &image.data[static_cast<std::size_t>(rect.y + y) * image.width + rect.x];
        std::uint8_t* dst = &out.data[static_cast<std::size_t>(y) * rect.width];
        std::copy(src, src + rect.width, dst);
    }
    return out;
}

void validate_costs(const CostMap& map) {
    if (map.data.size() != static_cast<std::size_t>(map.width) * map.height) {
        throw Error(Stage::cost, "cost map size does not match its dimensions");
    }
    for (double v : map.data) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error(Stage::cost, "cost map contains a negative or non-finite value");
        }
    }
}

}  // namespace bevnav
