#pragma once

#include <string>
#include <vector>

#include "bevnav/costgrid.hpp"

namespace bevnav {

struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell&) const = default;
};

// Search instance. Defaults follow the navigation convention: start at the
// bottom-center cell, goal at the top-center cell.
struct PlanProblem {
    CostGrid grid;
    Cell start;
    Cell goal;

    static PlanProblem with_default_endpoints(CostGrid grid);
};

// Entry-cost convention: total_cost charges every cell entered by a move and
// leaves the start cell free. expanded counts states finalized off the queue.
struct GridPath {
    std::vector<Cell> cells;
    double total_cost = 0.0;
    long long expanded = 0;
};

// A* over 4-adjacent cells with h(s) = c_min * manhattan(s, goal), where
// c_min is the cheapest grid cell. Each move costs at least c_min and h
// changes by exactly c_min per move, so the heuristic is consistent and the
// returned path has minimum total cost. Ties break on smaller f, then smaller
// h, then successor order North/East/South/West, then FIFO.
GridPath astar(const PlanProblem& p);

// Same machinery with h == 0; serves as the independent optimality oracle.
GridPath dijkstra(const PlanProblem& p);

// Number of moves, i.e. cells - 1.
int path_step_count(const GridPath& path);

// A planned or annotated path together with the grid it lives on; this is
// what the path JSON files carry.
struct PathRecord {
    GridSpec grid;
    Cell start;
    Cell goal;
    std::vector<Cell> cells;
    double total_cost = 0.0;
    int steps = 0;
    long long expanded = 0;
    std::string scene;  // optional display name used by eval tables
};

PathRecord make_record(const PlanProblem& p, const GridPath& path);

// Endpoint, bounds and 4-adjacency checks; throws on the first violation.
void validate_path_record(const PathRecord& record);

}  // namespace bevnav
