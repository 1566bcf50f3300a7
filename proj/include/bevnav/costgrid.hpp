#pragma once

#include <vector>

#include "bevnav/raster.hpp"

namespace bevnav {

// R x C grid anchored at origin (BEV pixels); each cell covers cell_mm x
// cell_mm of ground, which at the fixed 1 px/mm scale is the same number of
// BEV pixels.
struct GridSpec {
    int rows = 19;
    int cols = 20;
    int cell_mm = 100;
    int origin_x = 0;
    int origin_y = 0;

    bool operator==(const GridSpec&) const = default;
};

struct CostGrid {
    GridSpec spec;
    std::vector<double> cells;  // row-major, rows * cols mean costs

    double at(int row, int col) const { return cells[static_cast<std::size_t>(row) * spec.cols + col]; }
    double& at(int row, int col) { return cells[static_cast<std::size_t>(row) * spec.cols + col]; }
};

// Mean-pools the BEV cost map into the grid. The covered blocks are disjoint
// and tile the grid region exactly; a spec whose region leaves the map is
// rejected rather than averaged over a ragged edge.
CostGrid pool(const CostMap& bev, const GridSpec& spec);

}  // namespace bevnav
