#include "bevnav/scenegen.hpp"

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

void paint(LabelImage& image, const PaintRegion& region) {
    const RectMm& r = region.rect;
    if (r.width <= 0 || r.height <= 0) {
        throw Error(Stage::config, "scene rectangle has non-positive size");
    }
    if (r.x < 0 || r.y < 0 || r.x + r.width > image.width || r.y + r.height > image.height) {
        throw Error(Stage::config, "scene rectangle leaves the BEV canvas");
    }
    for (int y = r.y; y < r.y + r.height; ++y) {
        auto* row = &image.data[static_cast<std::size_t>(y) * image.width];
        std::fill(row + r.x, row + r.x + r.width, region.class_id);
    }
}

}  // namespace

LabelImage generate_bev_labels(const SceneSpec& spec, const BevCanvas& canvas) {
    if (canvas.width_mm <= 0 || canvas.height_mm <= 0) {
        throw Error(Stage::config, "BEV canvas must have positive dimensions");
    }
    LabelImage image = LabelImage::filled(canvas.width_mm, canvas.height_mm, spec.floor_class);
    if (spec.secondary_floor) paint(image, *spec.secondary_floor);
    for (const PaintRegion& obstacle : spec.obstacles) paint(image, obstacle);
    return image;
}

LabelImage generate_perspective_view(const LabelImage& bev_labels, const Homography& h, int width,
                                     int height) {
    return warp(bev_labels, invert(h), width, height, Sampling::nearest);
}

}  // namespace bevnav
