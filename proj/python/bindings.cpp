#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bevnav/costgrid.hpp"
#include "bevnav/costmap.hpp"
#include "bevnav/errors.hpp"
#include "bevnav/eval.hpp"
#include "bevnav/homography.hpp"
#include "bevnav/overlay.hpp"
#include "bevnav/planner.hpp"
#include "bevnav/scenegen.hpp"

namespace py = pybind11;
using namespace bevnav;

namespace {

Homography to_homography(const py::array_t<double, py::array::c_style | py::array::forcecast>& m) {
    if (m.ndim() != 2 || m.shape(0) != 3 || m.shape(1) != 3) {
        throw py::value_error("homography must be a 3x3 array");
    }
    std::array<double, 9> values;
    std::copy(m.data(), m.data() + 9, values.begin());
    return Homography::from_array(values);
}

py::array_t<double> from_homography(const Homography& h) {
    py::array_t<double> out({3, 3});
    const auto values = h.to_array();
    std::copy(values.begin(), values.end(), out.mutable_data());
    return out;
}

LabelImage to_labels(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw py::value_error("label image must be a 2-D uint8 array");
    LabelImage image;
    image.height = static_cast<int>(a.shape(0));
    image.width = static_cast<int>(a.shape(1));
    image.data.assign(a.data(), a.data() + a.size());
    return image;
}

py::array_t<std::uint8_t> from_labels(const LabelImage& image) {
    py::array_t<std::uint8_t> out({image.height, image.width});
    std::copy(image.data.begin(), image.data.end(), out.mutable_data());
    return out;
}

CostMap to_costs(const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                 CostMap::Space space) {
    if (a.ndim() != 2) throw py::value_error("cost map must be a 2-D float array");
    CostMap map;
    map.height = static_cast<int>(a.shape(0));
    map.width = static_cast<int>(a.shape(1));
    map.data.assign(a.data(), a.data() + a.size());
    map.space = space;
    return map;
}

py::array_t<double> from_costs(const CostMap& map) {
    py::array_t<double> out({map.height, map.width});
    std::copy(map.data.begin(), map.data.end(), out.mutable_data());
    return out;
}

CostConfig to_cost_config(const std::map<int, double>& classes, double default_cost,
                          double out_of_view_cost) {
    CostConfig cfg;
    cfg.default_cost = default_cost;
    cfg.out_of_view_cost = out_of_view_cost;
    for (const auto& [id, cost] : classes) {
        if (id < 0 || id > 255) throw py::value_error("class ids must be in 0..255");
        cfg.entries[static_cast<std::uint8_t>(id)] = {"class_" + std::to_string(id), cost};
    }
    return cfg;
}

CostGrid to_grid(const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                 int cell_mm) {
    if (a.ndim() != 2) throw py::value_error("cost grid must be a 2-D float array");
    CostGrid grid;
    grid.spec.rows = static_cast<int>(a.shape(0));
    grid.spec.cols = static_cast<int>(a.shape(1));
    grid.spec.cell_mm = cell_mm;
    grid.cells.assign(a.data(), a.data() + a.size());
    return grid;
}

py::dict path_to_dict(const GridPath& path) {
    py::list cells;
    for (const Cell& cell : path.cells) cells.append(py::make_tuple(cell.row, cell.col));
    py::dict out;
    out["path"] = std::move(cells);
    out["total_cost"] = path.total_cost;
    out["steps"] = path_step_count(path);
    out["expanded"] = path.expanded;
    return out;
}

GridPath run_search(const py::array_t<double, py::array::c_style | py::array::forcecast>& grid,
                    std::pair<int, int> start, std::pair<int, int> goal, bool use_astar) {
    PlanProblem p;
    p.grid = to_grid(grid, 100);
    p.start = {start.first, start.second};
    p.goal = {goal.first, goal.second};
    return use_astar ? astar(p) : dijkstra(p);
}

PathRecord cells_to_record(const std::vector<std::pair<int, int>>& cells, int rows, int cols) {
    PathRecord record;
    record.grid.rows = rows;
    record.grid.cols = cols;
    for (const auto& [r, c] : cells) record.cells.push_back({r, c});
    if (!record.cells.empty()) {
        record.start = record.cells.front();
        record.goal = record.cells.back();
        record.steps = static_cast<int>(record.cells.size()) - 1;
    }
    return record;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Label frame to ground-plane navigation path pipeline";

    py::register_exception<Error>(m, "PipelineError");

    m.def(
        "estimate_homography",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> src,
           py::array_t<double, py::array::c_style | py::array::forcecast> dst) {
            if (src.ndim() != 2 || src.shape(0) != 4 || src.shape(1) != 2 || dst.ndim() != 2 ||
                dst.shape(0) != 4 || dst.shape(1) != 2) {
                throw py::value_error("src and dst must be 4x2 point arrays");
            }
            Correspondences c;
            for (int i = 0; i < 4; ++i) {
                c.src[i] = {src.at(i, 0), src.at(i, 1)};
                c.dst[i] = {dst.at(i, 0), dst.at(i, 1)};
            }
            return from_homography(estimate(c));
        },
        py::arg("src"), py::arg("dst"),
        "Estimate the 3x3 perspective-to-BEV transform from four point pairs.");

    m.def(
        "invert_homography",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> h) {
            return from_homography(invert(to_homography(h)));
        },
        py::arg("h"));

    m.def(
        "project",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> h, double x, double y) {
            const Point p = project(to_homography(h), {x, y});
            return py::make_tuple(p.x, p.y);
        },
        py::arg("h"), py::arg("x"), py::arg("y"));

    m.def(
        "warp_labels",
        [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> labels,
           py::array_t<double, py::array::c_style | py::array::forcecast> h, int out_width,
           int out_height) {
            return from_labels(
                warp(to_labels(labels), to_homography(h), out_width, out_height, Sampling::nearest));
        },
        py::arg("labels"), py::arg("h"), py::arg("out_width"), py::arg("out_height"),
        "Nearest-sampled inverse-mapped warp; unobserved pixels become class 255.");

    m.def(
        "warp_costs",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> costs,
           py::array_t<double, py::array::c_style | py::array::forcecast> h, int out_width,
           int out_height, double out_of_view_cost, bool bilinear) {
            BevCanvas canvas{out_width, out_height};
            return from_costs(warp(to_costs(costs, CostMap::Space::perspective), to_homography(h),
                                   canvas, bilinear ? Sampling::bilinear : Sampling::nearest,
                                   out_of_view_cost));
        },
        py::arg("costs"), py::arg("h"), py::arg("out_width"), py::arg("out_height"),
        py::arg("out_of_view_cost") = 64.0, py::arg("bilinear") = false);

    m.def(
        "apply_costs",
        [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> labels,
           const std::map<int, double>& classes, double default_cost, double out_of_view_cost) {
            return from_costs(apply_costs(to_labels(labels),
                                          to_cost_config(classes, default_cost, out_of_view_cost),
                                          CostMap::Space::bev));
        },
        py::arg("labels"), py::arg("classes"), py::arg("default_cost") = 16.0,
        py::arg("out_of_view_cost") = 64.0,
        "Map class ids to traversal costs via the class table.");

    m.def(
        "pool",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> costs, int rows, int cols,
           int cell_mm, std::pair<int, int> origin) {
            GridSpec spec;
            spec.rows = rows;
            spec.cols = cols;
            spec.cell_mm = cell_mm;
            spec.origin_x = origin.first;
            spec.origin_y = origin.second;
            const CostGrid grid = pool(to_costs(costs, CostMap::Space::bev), spec);
            py::array_t<double> out({rows, cols});
            std::copy(grid.cells.begin(), grid.cells.end(), out.mutable_data());
            return out;
        },
        py::arg("costs"), py::arg("rows") = 19, py::arg("cols") = 20, py::arg("cell_mm") = 100,
        py::arg("origin") = std::pair<int, int>{0, 0},
        "Mean-pool a BEV cost map into an R x C grid of cell costs.");

    m.def(
        "astar",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> grid,
           std::pair<int, int> start, std::pair<int, int> goal) {
            return path_to_dict(run_search(grid, start, goal, true));
        },
        py::arg("grid"), py::arg("start"), py::arg("goal"),
        "Minimum-cost 4-connected grid path (entry-cost convention).");

    m.def(
        "dijkstra",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> grid,
           std::pair<int, int> start, std::pair<int, int> goal) {
            return path_to_dict(run_search(grid, start, goal, false));
        },
        py::arg("grid"), py::arg("start"), py::arg("goal"));

    m.def(
        "compare_paths",
        [](const std::vector<std::pair<int, int>>& result,
           const std::vector<std::pair<int, int>>& label, int rows, int cols) {
            const EvalRow row =
                compare_paths(cells_to_record(result, rows, cols), cells_to_record(label, rows, cols));
            py::dict out;
            out["steps_in_result"] = row.steps_in_result;
            out["steps_in_label"] = row.steps_in_label;
            out["matching_steps"] = row.matching_steps;
            out["different_steps"] = row.different_steps;
            return out;
        },
        py::arg("result"), py::arg("label"), py::arg("rows") = 19, py::arg("cols") = 20,
        "Four-column comparison of a planned path against an annotated one.");

    m.def(
        "render_overlay",
        [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> frame,
           const std::vector<std::pair<int, int>>& path,
           py::array_t<double, py::array::c_style | py::array::forcecast> h, int rows, int cols,
           int cell_mm) {
            if (frame.ndim() != 3 || frame.shape(2) != 3) {
                throw py::value_error("frame must be an HxWx3 uint8 array");
            }
            ColorImage image;
            image.height = static_cast<int>(frame.shape(0));
            image.width = static_cast<int>(frame.shape(1));
            image.data.assign(frame.data(), frame.data() + frame.size());

            GridPath grid_path;
            for (const auto& [r, c] : path) grid_path.cells.push_back({r, c});
            GridSpec spec;
            spec.rows = rows;
            spec.cols = cols;
            spec.cell_mm = cell_mm;

            const ColorImage rendered = render_overlay(image, grid_path, spec, to_homography(h));
            py::array_t<std::uint8_t> out({rendered.height, rendered.width, 3});
            std::copy(rendered.data.begin(), rendered.data.end(), out.mutable_data());
            return out;
        },
        py::arg("frame"), py::arg("path"), py::arg("h"), py::arg("rows") = 19, py::arg("cols") = 20,
        py::arg("cell_mm") = 100,
        "Draw the planned path back onto a perspective color frame.");

    m.def(
        "generate_bev_labels",
        [](int width_mm, int height_mm, int floor_class,
           const std::vector<std::tuple<int, int, int, int, int>>& obstacles) {
            SceneSpec spec;
            spec.floor_class = static_cast<std::uint8_t>(floor_class);
            for (const auto& [x, y, w, h, cls] : obstacles) {
                spec.obstacles.push_back({{x, y, w, h}, static_cast<std::uint8_t>(cls)});
            }
            return from_labels(generate_bev_labels(spec, BevCanvas{width_mm, height_mm}));
        },
        py::arg("width_mm"), py::arg("height_mm"), py::arg("floor_class") = 0,
        py::arg("obstacles") = std::vector<std::tuple<int, int, int, int, int>>{},
        "Paint a synthetic BEV label scene: floor, then (x, y, w, h, class) rectangles.");
}
