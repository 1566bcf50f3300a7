#pragma once

#include <string>

#include "bevnav/raster.hpp"

namespace bevnav {

// Label maps are 8-bit single-channel PNG, pixel value = class id. Anything
// else (palette, 16-bit, multi-channel) is rejected rather than converted.
LabelImage load_label_png(const std::string& path);
void save_label_png(const LabelImage& image, const std::string& path);

// Color frames are 8-bit 3-channel PNG and are used only for overlays.
ColorImage load_color_png(const std::string& path);
void save_color_png(const ColorImage& image, const std::string& path);

}  // namespace bevnav
