#include "bevnav/serial.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Stage::io, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Stage::io, path.string() + ": " + e.what());
    }
}

void write_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(Stage::io, "cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw Error(Stage::io, "failed to write " + path.string());
}

// JSON outputs carry floats at a fixed 9 significant digits so repeated runs
// are byte-identical.
json number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return json(std::stod(buf));
}

Point parse_point(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) {
        throw Error(Stage::config, what + " must be a [x, y] pair");
    }
    return Point{j[0].get<double>(), j[1].get<double>()};
}

Cell parse_cell(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) {
        throw Error(Stage::config, what + " must be a [row, col] pair");
    }
    return Cell{j[0].get<int>(), j[1].get<int>()};
}

std::array<double, 9> parse_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 9) {
        throw Error(Stage::config, what + " must be a row-major 9-element array");
    }
    std::array<double, 9> out;
    for (int i = 0; i < 9; ++i) out[i] = j[i].get<double>();
    return out;
}

RectMm parse_rect(const json& j, const std::string& what) {
    if (!j.is_object()) throw Error(Stage::config, what + " must be an object");
    try {
        return RectMm{j.at("x").get<int>(), j.at("y").get<int>(), j.at("width").get<int>(),
                      j.at("height").get<int>()};
    } catch (const json::exception& e) {
        throw Error(Stage::config, what + ": " + e.what());
    }
}

GridSpec parse_grid_spec(const json& j) {
    GridSpec spec;
    try {
        spec.rows = j.at("rows").get<int>();
        spec.cols = j.at("cols").get<int>();
        spec.cell_mm = j.at("cell_mm").get<int>();
        if (j.contains("origin")) {
            const json& origin = j.at("origin");
            if (!origin.is_array() || origin.size() != 2) {
                throw Error(Stage::config, "grid origin must be a [x, y] pair");
            }
            spec.origin_x = origin[0].get<int>();
            spec.origin_y = origin[1].get<int>();
        }
    } catch (const json::exception& e) {
        throw Error(Stage::config, std::string("grid spec: ") + e.what());
    }
    return spec;
}

json grid_spec_to_json(const GridSpec& spec) {
    return json{{"rows", spec.rows}, {"cols", spec.cols}, {"cell_mm", spec.cell_mm}};
}

CostConfig cost_config_from_json(const json& j) {
    CostConfig cfg;
    try {
        cfg.default_cost = j.at("default_cost").get<double>();
        cfg.out_of_view_cost = j.at("out_of_view_cost").get<double>();
        for (const auto& [key, value] : j.at("classes").items()) {
            const int id = std::stoi(key);
            if (id < 0 || id > 255) {
                throw Error(Stage::config, "class id " + key + " is outside 0..255");
            }
            cfg.entries[static_cast<std::uint8_t>(id)] = {value.at("name").get<std::string>(),
                                                          value.at("cost").get<double>()};
        }
    } catch (const json::exception& e) {
        throw Error(Stage::config, std::string("cost config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

Calibration calibration_from_json(const json& j) {
    Calibration calib;
    try {
        const json& src = j.at("src");
        const json& dst = j.at("dst");
        if (!src.is_array() || src.size() != 4 || !dst.is_array() || dst.size() != 4) {
            throw Error(Stage::config, "calibration needs exactly 4 src and 4 dst points");
        }
        for (int i = 0; i < 4; ++i) {
            calib.points.src[i] = parse_point(src[i], "calibration src point");
            calib.points.dst[i] = parse_point(dst[i], "calibration dst point");
        }
        calib.canvas.width_mm = j.at("bev_width_mm").get<int>();
        calib.canvas.height_mm = j.at("bev_height_mm").get<int>();
    } catch (const json::exception& e) {
        throw Error(Stage::config, std::string("calibration: ") + e.what());
    }
    if (calib.canvas.width_mm <= 0 || calib.canvas.height_mm <= 0) {
        throw Error(Stage::config, "calibration BEV canvas must have positive dimensions");
    }
    return calib;
}

}  // namespace

Calibration load_calibration(const std::filesystem::path& path) {
    return calibration_from_json(read_json(path));
}

void save_homography_cache(const HomographyCache& cache, const std::filesystem::path& path) {
    json j;
    j["matrix"] = cache.forward.to_array();
    j["inverse"] = cache.inverse.to_array();
    j["bev_width_mm"] = cache.canvas.width_mm;
    j["bev_height_mm"] = cache.canvas.height_mm;
    write_json(j, path);
}

HomographyCache load_homography_cache(const std::filesystem::path& path) {
    const json j = read_json(path);
    HomographyCache cache;
    try {
        cache.forward = Homography::from_array(parse_matrix(j.at("matrix"), "matrix"));
        cache.inverse = Homography::from_array(parse_matrix(j.at("inverse"), "inverse"));
        cache.canvas.width_mm = j.at("bev_width_mm").get<int>();
        cache.canvas.height_mm = j.at("bev_height_mm").get<int>();
    } catch (const json::exception& e) {
        throw Error(Stage::config, path.string() + ": " + e.what());
    }
    return cache;
}

CostConfig load_cost_config(const std::filesystem::path& path) {
    return cost_config_from_json(read_json(path));
}

PathRecord load_path_record(const std::filesystem::path& path) {
    const json j = read_json(path);
    PathRecord record;
    try {
        record.grid = parse_grid_spec(j.at("grid"));
        record.start = parse_cell(j.at("start"), "start");
        record.goal = parse_cell(j.at("goal"), "goal");
        for (const json& cell : j.at("path")) {
            record.cells.push_back(parse_cell(cell, "path cell"));
        }
        record.total_cost = j.at("total_cost").get<double>();
        record.steps = j.at("steps").get<int>();
        record.expanded = j.at("expanded").get<long long>();
        if (j.contains("scene")) record.scene = j.at("scene").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(Stage::config, path.string() + ": " + e.what());
    }
    return record;
}

void save_path_record(const PathRecord& record, const std::filesystem::path& path) {
    json j;
    j["grid"] = grid_spec_to_json(record.grid);
    j["start"] = {record.start.row, record.start.col};
    j["goal"] = {record.goal.row, record.goal.col};
    json cells = json::array();
    for (const Cell& cell : record.cells) cells.push_back({cell.row, cell.col});
    j["path"] = std::move(cells);
    j["total_cost"] = number(record.total_cost);
    j["steps"] = record.steps;
    j["expanded"] = record.expanded;
    if (!record.scene.empty()) j["scene"] = record.scene;
    write_json(j, path);
}

void save_cost_grid(const CostGrid& grid, const std::filesystem::path& path) {
    json j = grid_spec_to_json(grid.spec);
    json cells = json::array();
    for (double v : grid.cells) cells.push_back(number(v));
    j["cells"] = std::move(cells);
    write_json(j, path);
}

CostGrid load_cost_grid(const std::filesystem::path& path) {
    const json j = read_json(path);
    CostGrid grid;
    try {
        grid.spec = parse_grid_spec(j);
        for (const json& v : j.at("cells")) grid.cells.push_back(v.get<double>());
    } catch (const json::exception& e) {
        throw Error(Stage::config, path.string() + ": " + e.what());
    }
    if (grid.cells.size() != static_cast<std::size_t>(grid.spec.rows) * grid.spec.cols) {
        throw Error(Stage::config, path.string() + ": cell count does not match rows x cols");
    }
    return grid;
}

SceneFile load_scene(const std::filesystem::path& path) {
    const json j = read_json(path);
    SceneFile scene;
    try {
        scene.canvas.width_mm = j.at("bev_width_mm").get<int>();
        scene.canvas.height_mm = j.at("bev_height_mm").get<int>();
        scene.spec.floor_class = static_cast<std::uint8_t>(j.at("floor_class").get<int>());
        if (j.contains("seed")) scene.spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("secondary_floor")) {
            const json& sf = j.at("secondary_floor");
            scene.spec.secondary_floor =
                PaintRegion{parse_rect(sf, "secondary_floor"),
                            static_cast<std::uint8_t>(sf.at("class").get<int>())};
        }
        if (j.contains("obstacles")) {
            for (const json& ob : j.at("obstacles")) {
                scene.spec.obstacles.push_back(
                    PaintRegion{parse_rect(ob, "obstacle"),
                                static_cast<std::uint8_t>(ob.at("class").get<int>())});
            }
        }
        scene.perspective_width = j.value("perspective_width", scene.canvas.width_mm);
        scene.perspective_height = j.value("perspective_height", scene.canvas.height_mm);
    } catch (const json::exception& e) {
        throw Error(Stage::config, path.string() + ": " + e.what());
    }
    return scene;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    const json j = read_json(path);
    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
    PipelineConfig cfg;
    try {
        const json& calib_ref = j.at("calibration");
        const Calibration calib = calib_ref.is_string()
                                      ? load_calibration(base / calib_ref.get<std::string>())
                                      : calibration_from_json(calib_ref);
        cfg.correspondences = calib.points;
        cfg.canvas = calib.canvas;

        const json& cost_ref = j.at("cost_config");
        cfg.costs = cost_ref.is_string() ? load_cost_config(base / cost_ref.get<std::string>())
                                         : cost_config_from_json(cost_ref);

        if (j.contains("grid")) cfg.grid = parse_grid_spec(j.at("grid"));
        if (j.contains("crop")) {
            const RectMm r = parse_rect(j.at("crop"), "crop");
            cfg.crop = CropRect{r.x, r.y, r.width, r.height};
        }
        if (j.contains("start")) cfg.start = parse_cell(j.at("start"), "start");
        if (j.contains("goal")) cfg.goal = parse_cell(j.at("goal"), "goal");
        if (j.contains("sampling")) {
            const std::string s = j.at("sampling").get<std::string>();
            if (s == "nearest") {
                cfg.sampling = Sampling::nearest;
            } else if (s == "bilinear") {
                cfg.sampling = Sampling::bilinear;
            } else {
                throw Error(Stage::config, "sampling must be \"nearest\" or \"bilinear\"");
            }
        }
        if (j.contains("order")) {
            const std::string s = j.at("order").get<std::string>();
            if (s == "warp_then_cost") {
                cfg.order = PipelineConfig::Order::warp_then_cost;
            } else if (s == "cost_then_warp") {
                cfg.order = PipelineConfig::Order::cost_then_warp;
            } else {
                throw Error(Stage::config, "order must be \"warp_then_cost\" or \"cost_then_warp\"");
            }
        }
    } catch (const json::exception& e) {
        throw Error(Stage::config, path.string() + ": " + e.what());
    }
    if (cfg.grid.origin_x + cfg.grid.cols * cfg.grid.cell_mm > cfg.canvas.width_mm ||
        cfg.grid.origin_y + cfg.grid.rows * cfg.grid.cell_mm > cfg.canvas.height_mm) {
        throw Error(Stage::config, "grid does not fit the BEV canvas");
    }
    return cfg;
}

}  // namespace bevnav
