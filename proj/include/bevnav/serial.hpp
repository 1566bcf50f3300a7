#pragma once

#include <filesystem>
#include <string>

#include "bevnav/costgrid.hpp"
#include "bevnav/costmap.hpp"
#include "bevnav/homography.hpp"
#include "bevnav/pipeline.hpp"
#include "bevnav/planner.hpp"
#include "bevnav/scenegen.hpp"

namespace bevnav {

// Four point pairs plus the BEV canvas they map into.
struct Calibration {
    Correspondences points;
    BevCanvas canvas;
};

// Cached estimation result: the normalized matrix and its inverse, both as
// row-major 9-element arrays at full precision.
struct HomographyCache {
    Homography forward;
    Homography inverse;
    BevCanvas canvas;
};

// Scene description file consumed by the gen subcommand.
struct SceneFile {
    SceneSpec spec;
    BevCanvas canvas;
    int perspective_width = 0;   // defaults to the canvas when omitted
    int perspective_height = 0;
};

Calibration load_calibration(const std::filesystem::path& path);
void save_homography_cache(const HomographyCache& cache, const std::filesystem::path& path);
HomographyCache load_homography_cache(const std::filesystem::path& path);

CostConfig load_cost_config(const std::filesystem::path& path);

PathRecord load_path_record(const std::filesystem::path& path);
void save_path_record(const PathRecord& record, const std::filesystem::path& path);

void save_cost_grid(const CostGrid& grid, const std::filesystem::path& path);
CostGrid load_cost_grid(const std::filesystem::path& path);

SceneFile load_scene(const std::filesystem::path& path);

// Pipeline config file; "calibration" and "cost_config" may be inline objects
// or paths resolved relative to the config file's directory.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

}  // namespace bevnav
