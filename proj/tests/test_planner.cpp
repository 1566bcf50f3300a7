#include <doctest.h>

#include <random>

#include "bevnav/errors.hpp"
#include "bevnav/planner.hpp"
#include "test_util.hpp"

using namespace bevnav;

namespace {

CostGrid uniform_grid(int rows, int cols, double cost) {
    CostGrid grid;
    grid.spec.rows = rows;
    grid.spec.cols = cols;
    grid.cells.assign(static_cast<std::size_t>(rows) * cols, cost);
    return grid;
}

}  // namespace

TEST_CASE("uniform 19x20 grid yields the straight 18-move column path") {
    PlanProblem p = PlanProblem::with_default_endpoints(uniform_grid(19, 20, 1.0));
    REQUIRE(p.start == Cell{18, 10});
    REQUIRE(p.goal == Cell{0, 10});

    const GridPath path = astar(p);
    CHECK(path.cells.size() == 19);
    CHECK(path_step_count(path) == 18);
    CHECK(path.total_cost == 18.0);
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        REQUIRE(path.cells[i] == Cell{18 - static_cast<int>(i), 10});
    }
    // the heuristic prunes the uniform grid down to the goal column
    CHECK(path.expanded <= dijkstra(p).expanded);
}

TEST_CASE("wall with a gap forces the detour through the gap") {
    // full-width wall of 64 on row 2 with a single cost-1 gap at col 4
    CostGrid grid = uniform_grid(5, 5, 1.0);
    for (int c = 0; c < 5; ++c) grid.at(2, c) = 64.0;
    grid.at(2, 4) = 1.0;

    PlanProblem p = PlanProblem::with_default_endpoints(grid);
    const GridPath path = astar(p);
    const GridPath oracle = dijkstra(p);
    CHECK(path.total_cost == oracle.total_cost);

    bool through_gap = false;
    for (const Cell& cell : path.cells) {
        if (cell == Cell{2, 4}) through_gap = true;
    }
    CHECK(through_gap);
}

TEST_CASE("dijkstra handles the degenerate single-cell instance") {
    PlanProblem p;
    p.grid = uniform_grid(1, 1, 2.0);
    p.start = {0, 0};
    p.goal = {0, 0};
    const GridPath path = dijkstra(p);
    CHECK(path.cells.size() == 1);
    CHECK(path.total_cost == 0.0);
    CHECK(path_step_count(path) == 0);
}

TEST_CASE("tie-breaking selects the north-first L on a uniform 2x2 grid") {
    PlanProblem p;
    p.grid = uniform_grid(2, 2, 1.0);
    p.start = {1, 0};
    p.goal = {0, 1};
    const GridPath path = dijkstra(p);
    REQUIRE(path.cells.size() == 3);
    CHECK(path.total_cost == 2.0);
    CHECK(path.cells[0] == Cell{1, 0});
    CHECK(path.cells[1] == Cell{0, 0});
    CHECK(path.cells[2] == Cell{0, 1});

    // astar agrees on cost and obeys the same tie rules
    const GridPath a = astar(p);
    CHECK(a.total_cost == 2.0);
}

TEST_CASE("astar equals the dijkstra oracle on random grids") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> rows_dist(2, 19), cols_dist(2, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = rows_dist(rng);
        const int cols = cols_dist(rng);
        PlanProblem p;
        p.grid = test::random_grid(rng, rows, cols);
        std::uniform_int_distribution<int> rr(0, rows - 1), cc(0, cols - 1);
        p.start = {rr(rng), cc(rng)};
        p.goal = {rr(rng), cc(rng)};

        const GridPath a = astar(p);
        const GridPath d = dijkstra(p);
        REQUIRE(a.total_cost == d.total_cost);  // exact: integer-valued costs
        REQUIRE(a.expanded <= d.expanded);
        REQUIRE_NOTHROW(validate_path_record(make_record(p, a)));
        REQUIRE_NOTHROW(validate_path_record(make_record(p, d)));
    }
}

TEST_CASE("scaling all costs leaves the chosen cells unchanged") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        PlanProblem p = PlanProblem::with_default_endpoints(test::random_grid(rng, 12, 14));
        const GridPath base = astar(p);

        PlanProblem scaled = p;
        for (double& v : scaled.grid.cells) v *= 3.25;
        const GridPath result = astar(scaled);
        REQUIRE(result.cells == base.cells);
        REQUIRE(result.total_cost == doctest::Approx(base.total_cost * 3.25));
    }
}

TEST_CASE("a fully blocked row still yields a path that pays the toll") {
    CostGrid grid = uniform_grid(19, 20, 1.0);
    for (int c = 0; c < 20; ++c) grid.at(9, c) = 64.0;
    const GridPath path = astar(PlanProblem::with_default_endpoints(grid));
    CHECK(path.total_cost >= 64.0);
    bool crossed = false;
    for (const Cell& cell : path.cells) crossed |= (cell.row == 9);
    CHECK(crossed);
}

TEST_CASE("path_step_count is cells minus one") {
    GridPath path;
    path.cells = {{0, 0}};
    CHECK(path_step_count(path) == 0);
    for (int i = 1; i < 23; ++i) path.cells.push_back({0, i % 2});
    CHECK(path_step_count(path) == 22);
    CHECK_THROWS_AS(path_step_count(GridPath{}), Error);
}

TEST_CASE("planner validates its inputs") {
    PlanProblem p = PlanProblem::with_default_endpoints(uniform_grid(5, 5, 1.0));

    SUBCASE("start outside the grid") {
        p.start = {5, 0};
        CHECK_THROWS_AS(astar(p), Error);
    }
    SUBCASE("goal outside the grid") {
        p.goal = {0, -1};
        CHECK_THROWS_AS(astar(p), Error);
    }
    SUBCASE("zero minimum cost breaks the heuristic precondition") {
        p.grid.at(2, 2) = 0.0;
        CHECK_THROWS_AS(astar(p), Error);
        CHECK_THROWS_AS(dijkstra(p), Error);
    }
    SUBCASE("negative and non-finite costs are rejected") {
        p.grid.at(1, 1) = -2.0;
        CHECK_THROWS_AS(astar(p), Error);
        p.grid.at(1, 1) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(astar(p), Error);
    }
}
