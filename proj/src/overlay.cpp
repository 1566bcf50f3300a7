#include "bevnav/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

void put(ColorImage& image, int x, int y, const Rgb& color) {
    if (x < 0 || x >= image.width || y < 0 || y >= image.height) return;
    const std::size_t i = image.offset(x, y);
    image.data[i] = color.r;
    image.data[i + 1] = color.g;
    image.data[i + 2] = color.b;
}

void fill_disc(ColorImage& image, const Point& center, double radius, const Rgb& color) {
    const int x0 = static_cast<int>(std::floor(center.x - radius)) - 1;
    const int x1 = static_cast<int>(std::ceil(center.x + radius)) + 1;
    const int y0 = static_cast<int>(std::floor(center.y - radius)) - 1;
    const int y1 = static_cast<int>(std::ceil(center.y + radius)) + 1;
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double dx = (x + 0.5) - center.x;
            const double dy = (y + 0.5) - center.y;
            if (dx * dx + dy * dy <= r2) put(image, x, y, color);
        }
    }
}

void fill_segment(ColorImage& image, const Point& a, const Point& b, double half_width,
                  const Rgb& color) {
    const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    const int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) - half_width)) - 1;
    const int x1 = static_cast<int>(std::ceil(std::max(a.x, b.x) + half_width)) + 1;
    const int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) - half_width)) - 1;
    const int y1 = static_cast<int>(std::ceil(std::max(a.y, b.y) + half_width)) + 1;
    const double w2 = half_width * half_width;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double px = x + 0.5;
            const double py = y + 0.5;
            double t = 0.0;
            if (len2 > 0.0) {
                t = std::clamp(((px - a.x) * (b.x - a.x) + (py - a.y) * (b.y - a.y)) / len2, 0.0, 1.0);
            }
            const double dx = px - (a.x + t * (b.x - a.x));
            const double dy = py - (a.y + t * (b.y - a.y));
            if (dx * dx + dy * dy <= w2) put(image, x, y, color);
        }
    }
}

}  // namespace

ColorImage render_overlay(const ColorImage& frame, const GridPath& path, const GridSpec& spec,
                          const Homography& h, const OverlayStyle& style) {
    if (style.marker_radius_px < 1 || style.line_width_px < 1) {
        throw Error(Stage::render, "overlay marker radius and line width must be at least 1 px");
    }
    ColorImage out = frame;
    if (path.cells.empty()) return out;

    const Homography bev_to_persp = invert(h);
    std::vector<std::optional<Point>> centers;
    centers.reserve(path.cells.size());
    for (const Cell& cell : path.cells) {
        const Point bev{spec.origin_x + (cell.col + 0.5) * spec.cell_mm,
                        spec.origin_y + (cell.row + 0.5) * spec.cell_mm};
        centers.push_back(try_project(bev_to_persp, bev));
    }

    const double half_width = style.line_width_px / 2.0;
    for (std::size_t i = 1; i < centers.size(); ++i) {
        if (centers[i - 1] && centers[i]) {
            fill_segment(out, *centers[i - 1], *centers[i], half_width, style.path_color);
        }
    }
    for (const auto& center : centers) {
        if (center) fill_disc(out, *center, style.marker_radius_px, style.path_color);
    }
    if (centers.front()) fill_disc(out, *centers.front(), style.marker_radius_px, style.start_color);
    if (centers.back()) fill_disc(out, *centers.back(), style.marker_radius_px, style.goal_color);
    return out;
}

}  // namespace bevnav
