#include "bevnav/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

struct QueueEntry {
    double f = 0.0;
    double h = 0.0;
    std::uint64_t seq = 0;  // push order; makes the remaining ties FIFO
    int index = 0;
};

struct LaterEntry {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.seq > b.seq;
    }
};

void check_in_bounds(const GridSpec& spec, const Cell& cell, const char* what) {
    if (cell.row < 0 || cell.row >= spec.rows || cell.col < 0 || cell.col >= spec.cols) {
        throw Error(Stage::plan, std::string(what) + " cell (" + std::to_string(cell.row) + "," +
                                     std::to_string(cell.col) + ") is out of grid bounds");
    }
}

GridPath search(const PlanProblem& p, bool use_manhattan) {
    const GridSpec& spec = p.grid.spec;
    check_in_bounds(spec, p.start, "start");
    check_in_bounds(spec, p.goal, "goal");
    if (p.grid.cells.size() != static_cast<std::size_t>(spec.rows) * spec.cols) {
        throw Error(Stage::plan, "cost grid size does not match its spec");
    }

    double c_min = std::numeric_limits<double>::infinity();
    for (double v : p.grid.cells) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error(Stage::plan, "grid costs must be finite and non-negative");
        }
        c_min = std::min(c_min, v);
    }
    if (c_min <= 0.0) {
        throw Error(Stage::plan, "minimum grid cost must be positive for an admissible heuristic");
    }

    const int cols = spec.cols;
    const int n = spec.rows * cols;
    const int start = p.start.row * cols + p.start.col;
    const int goal = p.goal.row * cols + p.goal.col;
    auto heuristic = [&](int row, int col) {
        if (!use_manhattan) return 0.0;
        return c_min * (std::abs(row - p.goal.row) + std::abs(col - p.goal.col));
    };

    // Best-known-cost table starts at "very high" everywhere and is relaxed
    // as states are expanded.
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    std::vector<char> closed(n, 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, LaterEntry> open;

    std::uint64_t seq = 0;
    best[start] = 0.0;
    open.push({heuristic(p.start.row, p.start.col), heuristic(p.start.row, p.start.col), seq++, start});

    GridPath result;
    while (!open.empty()) {
        const QueueEntry entry = open.top();
        open.pop();
        if (closed[entry.index]) continue;  // superseded duplicate
        closed[entry.index] = 1;
        ++result.expanded;
        if (entry.index == goal) break;

        const int row = entry.index / cols;
        const int col = entry.index % cols;
        // Successor generation order: North (toward the goal side), East,
        // South, West.
        static constexpr int kDr[4] = {-1, 0, 1, 0};
        static constexpr int kDc[4] = {0, 1, 0, -1};
        for (int k = 0; k < 4; ++k) {
            const int nr = row + kDr[k];
            const int nc = col + kDc[k];
            if (nr < 0 || nr >= spec.rows || nc < 0 || nc >= cols) continue;
            const int next = nr * cols + nc;
            if (closed[next]) continue;
            const double g = best[entry.index] + p.grid.at(nr, nc);
            if (g < best[next]) {
                best[next] = g;
                parent[next] = entry.index;
                open.push({g + heuristic(nr, nc), heuristic(nr, nc), seq++, next});
            }
        }
    }

    // Finite costs make every cell reachable, so the goal was closed above.
    result.total_cost = best[goal];
    for (int index = goal; index != -1; index = parent[index]) {
        result.cells.push_back({index / cols, index % cols});
    }
    std::reverse(result.cells.begin(), result.cells.end());
    return result;
}

}  // namespace

PlanProblem PlanProblem::with_default_endpoints(CostGrid grid) {
    PlanProblem p;
    p.start = {grid.spec.rows - 1, grid.spec.cols / 2};
    p.goal = {0, grid.spec.cols / 2};
    p.grid = std::move(grid);
    return p;
}

GridPath astar(const PlanProblem& p) { return search(p, true); }

GridPath dijkstra(const PlanProblem& p) { return search(p, false); }

int path_step_count(const GridPath& path) {
    if (path.cells.empty()) {
        throw Error(Stage::plan, "cannot count steps of an empty path");
    }
    return static_cast<int>(path.cells.size()) - 1;
}

PathRecord make_record(const PlanProblem& p, const GridPath& path) {
    PathRecord record;
    record.grid = p.grid.spec;
    record.start = p.start;
    record.goal = p.goal;
    record.cells = path.cells;
    record.total_cost = path.total_cost;
    record.steps = path_step_count(path);
    record.expanded = path.expanded;
    return record;
}

void validate_path_record(const PathRecord& record) {
    if (record.cells.empty()) {
        throw Error(Stage::eval, "path has no cells");
    }
    if (!(record.cells.front() == record.start) || !(record.cells.back() == record.goal)) {
        throw Error(Stage::eval, "path endpoints do not match its start/goal");
    }
    for (std::size_t i = 0; i < record.cells.size(); ++i) {
        const Cell& cell = record.cells[i];
        if (cell.row < 0 || cell.row >= record.grid.rows || cell.col < 0 ||
            cell.col >= record.grid.cols) {
            throw Error(Stage::eval, "path cell " + std::to_string(i) + " is out of grid bounds");
        }
        if (i > 0) {
            const Cell& prev = record.cells[i - 1];
            const int dist = std::abs(cell.row - prev.row) + std::abs(cell.col - prev.col);
            if (dist != 1) {
                throw Error(Stage::eval, "path cells " + std::to_string(i - 1) + " and " +
                                             std::to_string(i) + " are not 4-adjacent");
            }
        }
    }
    if (record.steps != static_cast<int>(record.cells.size()) - 1) {
        throw Error(Stage::eval, "path step count does not match its cells");
    }
}

}  // namespace bevnav
