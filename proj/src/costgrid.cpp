#include "bevnav/costgrid.hpp"

#include "bevnav/errors.hpp"

namespace bevnav {

CostGrid pool(const CostMap& bev, const GridSpec& spec) {
    if (bev.space != CostMap::Space::bev) {
        throw Error(Stage::grid, "pooling expects a BEV cost map");
    }
    if (spec.rows <= 0 || spec.cols <= 0 || spec.cell_mm <= 0) {
        throw Error(Stage::grid, "grid spec must have positive rows, cols and cell size");
    }
    if (spec.origin_x < 0 || spec.origin_y < 0 ||
        spec.origin_x + spec.cols * spec.cell_mm > bev.width ||
        spec.origin_y + spec.rows * spec.cell_mm > bev.height) {
        throw Error(Stage::grid, "grid region leaves the BEV cost map bounds");
    }
    validate_costs(bev);

    CostGrid grid;
    grid.spec = spec;
    grid.cells.resize(static_cast<std::size_t>(spec.rows) * spec.cols);
    const double block_px = static_cast<double>(spec.cell_mm) * spec.cell_mm;
    for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
            const int x0 = spec.origin_x + c * spec.cell_mm;
            const int y0 = spec.origin_y + r * spec.cell_mm;
            double sum = 0.0;
            for (int y = y0; y < y0 + spec.cell_mm; ++y) {
                const double* row = &bev.data[static_cast<std::size_t>(y) * bev.width + x0];
                for (int x = 0; x < spec.cell_mm; ++x) sum += row[x];
            }
            grid.at(r, c) = sum / block_px;
        }
    }
    return grid;
}

}  // namespace bevnav
