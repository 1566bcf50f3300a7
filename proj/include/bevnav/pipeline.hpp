#pragma once

#include <optional>

#include "bevnav/costgrid.hpp"
#include "bevnav/costmap.hpp"
#include "bevnav/homography.hpp"
#include "bevnav/planner.hpp"
#include "bevnav/raster.hpp"

namespace bevnav {

// Everything one planning run needs: optional floor crop, the four-point
// calibration, the class cost table, the pooling grid and optional start/goal
// overrides. Costs may be applied before or after the BEV warp; the two
// orders commute under nearest sampling and warp-then-cost is the default.
struct PipelineConfig {
    enum class Order { warp_then_cost, cost_then_warp };

    std::optional<CropRect> crop;
    Correspondences correspondences;
    BevCanvas canvas;
    CostConfig costs;
    GridSpec grid;
    std::optional<Cell> start;
    std::optional<Cell> goal;
    Sampling sampling = Sampling::nearest;
    Order order = Order::warp_then_cost;
};

struct PlanOutcome {
    PathRecord record;
    GridPath path;
    CostGrid grid;
    Homography homography;
};

// crop -> warp -> costs -> pool -> astar (or crop -> costs -> warp -> pool ->
// astar under cost_then_warp).
PlanOutcome run_plan(const LabelImage& labels, const PipelineConfig& cfg);

}  // namespace bevnav
