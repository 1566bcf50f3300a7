#include "bevnav/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "bevnav/errors.hpp"
#include "bevnav/overlay.hpp"
#include "bevnav/pipeline.hpp"
#include "bevnav/png_io.hpp"
#include "bevnav/serial.hpp"

namespace bevnav {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int report(const Error& e, int code) {
    std::cerr << e.tagged() << '\n';
    return code;
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& extension) {
    if (!fs::is_directory(dir)) {
        throw Error(Stage::io, dir.string() + " is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == extension) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

json round9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return json(std::stod(buf));
}

void write_json_file(const json& j, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(Stage::io, "cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace

int cmd_calibrate(const std::string& calib_json, const std::string& out_path) {
    HomographyCache cache;
    try {
        const Calibration calib = load_calibration(calib_json);
        cache.forward = estimate(calib.points);
        cache.inverse = invert(cache.forward);
        cache.canvas = calib.canvas;
    } catch (const Error& e) {
        return report(e, 2);
    }
    try {
        save_homography_cache(cache, out_path);
    } catch (const Error& e) {
        return report(e, 1);
    }
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int cmd_plan(const PlanArgs& args) {
    PipelineConfig cfg;
    try {
        cfg = load_pipeline_config(args.config);
        if (!args.overlay_png.empty() && args.frame_png.empty()) {
            throw Error(Stage::config, "--overlay requires a color frame (--frame)");
        }
    } catch (const Error& e) {
        return report(e, 2);
    }

    try {
        const LabelImage labels = load_label_png(args.label_png);
        const PlanOutcome outcome = run_plan(labels, cfg);

        save_path_record(outcome.record, args.out_json);

        if (!args.overlay_png.empty()) {
            const ColorImage frame = load_color_png(args.frame_png);
            const ColorImage rendered =
                render_overlay(frame, outcome.path, cfg.grid, outcome.homography);
            save_color_png(rendered, args.overlay_png);
        }
        std::cout << args.out_json << ": " << outcome.record.steps << " steps, total cost "
                  << outcome.record.total_cost << '\n';
    } catch (const Error& e) {
        return report(e, 1);
    }
    return 0;
}

int cmd_eval(const std::string& results_dir, const std::string& labels_dir, TableFormat format,
             const std::string& out_path) {
    std::vector<fs::path> results;
    std::vector<fs::path> labels;
    try {
        results = sorted_files(results_dir, ".json");
        labels = sorted_files(labels_dir, ".json");
    } catch (const Error& e) {
        return report(e, 2);
    }

    try {
        auto stem_of = [](const fs::path& p) { return p.stem().string(); };
        std::vector<std::string> unpaired;
        for (const auto& r : results) {
            if (std::none_of(labels.begin(), labels.end(),
                             [&](const fs::path& l) { return stem_of(l) == stem_of(r); })) {
                unpaired.push_back(stem_of(r) + " (no label)");
            }
        }
        for (const auto& l : labels) {
            if (std::none_of(results.begin(), results.end(),
                             [&](const fs::path& r) { return stem_of(r) == stem_of(l); })) {
                unpaired.push_back(stem_of(l) + " (no result)");
            }
        }
        if (!unpaired.empty()) {
            std::string scenes;
            for (const auto& s : unpaired) scenes += (scenes.empty() ? "" : ", ") + s;
            throw Error(Stage::eval, "unpaired scenes: " + scenes);
        }

        std::vector<EvalRow> rows;
        for (const auto& r : results) {
            const auto label_it =
                std::find_if(labels.begin(), labels.end(),
                             [&](const fs::path& l) { return stem_of(l) == stem_of(r); });
            EvalRow row = compare_paths(load_path_record(r), load_path_record(*label_it));
            if (row.scene.empty()) row.scene = stem_of(r);
            rows.push_back(std::move(row));
        }

        const std::string table = emit_table(rows, format);
        std::cout << table;
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw Error(Stage::io, "cannot open " + out_path + " for writing");
            out << table;
        }
    } catch (const Error& e) {
        return report(e, 1);
    }
    return 0;
}

int cmd_batch(const std::string& frames_dir, const std::string& config_path,
              const std::string& out_dir, bool timings) {
    PipelineConfig cfg;
    std::vector<fs::path> frames;
    try {
        cfg = load_pipeline_config(config_path);
        frames = sorted_files(frames_dir, ".png");
        std::erase_if(frames, [](const fs::path& p) {
            return p.stem().string().ends_with("_rgb");
        });
        fs::create_directories(out_dir);
    } catch (const Error& e) {
        return report(e, 2);
    }

    json manifest;
    manifest["frames"] = json::array();
    bool any_failed = false;
    for (const auto& frame_path : frames) {
        const std::string stem = frame_path.stem().string();
        json entry;
        entry["frame"] = stem;
        const auto started = std::chrono::steady_clock::now();
        try {
            const LabelImage labels = load_label_png(frame_path.string());
            const PlanOutcome outcome = run_plan(labels, cfg);

            const std::string path_file = stem + "_path.json";
            save_path_record(outcome.record, fs::path(out_dir) / path_file);
            entry["path_file"] = path_file;
            entry["total_cost"] = round9(outcome.record.total_cost);
            entry["steps"] = outcome.record.steps;
            entry["expanded"] = outcome.record.expanded;

            const fs::path rgb = frame_path.parent_path() / (stem + "_rgb.png");
            if (fs::exists(rgb)) {
                const ColorImage frame = load_color_png(rgb.string());
                const ColorImage rendered =
                    render_overlay(frame, outcome.path, cfg.grid, outcome.homography);
                save_color_png(rendered, (fs::path(out_dir) / (stem + "_overlay.png")).string());
                entry["overlay_file"] = stem + "_overlay.png";
            }
        } catch (const Error& e) {
            entry["error"] = e.tagged();
            any_failed = true;
        }
        if (timings) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            entry["wall_ms"] = round9(std::chrono::duration<double, std::milli>(elapsed).count());
        }
        manifest["frames"].push_back(std::move(entry));
    }

    try {
        write_json_file(manifest, fs::path(out_dir) / "manifest.json");
    } catch (const Error& e) {
        return report(e, 1);
    }
    std::cout << "processed " << frames.size() << " frames into " << out_dir << '\n';
    return any_failed ? 1 : 0;
}

int cmd_gen(const std::string& scene_json, const std::string& out_dir,
            const std::string& config_path) {
    SceneFile scene;
    Homography h;  // identity unless a pipeline config supplies calibration
    CostConfig costs = CostConfig::default_config();
    GridSpec grid;
    std::optional<Cell> start;
    std::optional<Cell> goal;
    try {
        scene = load_scene(scene_json);
        if (!config_path.empty()) {
            const PipelineConfig cfg = load_pipeline_config(config_path);
            h = estimate(cfg.correspondences);
            costs = cfg.costs;
            grid = cfg.grid;
            start = cfg.start;
            goal = cfg.goal;
        }
        fs::create_directories(out_dir);
    } catch (const Error& e) {
        return report(e, 2);
    }

    try {
        const std::string stem = fs::path(scene_json).stem().string();
        const LabelImage bev_labels = generate_bev_labels(scene.spec, scene.canvas);
        save_label_png(bev_labels, (fs::path(out_dir) / (stem + "_bev_labels.png")).string());

        const LabelImage perspective = generate_perspective_view(
            bev_labels, h, scene.perspective_width, scene.perspective_height);
        save_label_png(perspective, (fs::path(out_dir) / (stem + "_perspective.png")).string());

        const CostMap bev_costs = apply_costs(bev_labels, costs, CostMap::Space::bev);
        PlanProblem problem = PlanProblem::with_default_endpoints(pool(bev_costs, grid));
        if (start) problem.start = *start;
        if (goal) problem.goal = *goal;
        const GridPath truth = dijkstra(problem);
        PathRecord record = make_record(problem, truth);
        record.scene = stem;
        save_path_record(record, fs::path(out_dir) / (stem + "_truth.json"));
        std::cout << "generated " << stem << " fixtures in " << out_dir << '\n';
    } catch (const Error& e) {
        return report(e, 1);
    }
    return 0;
}

}  // namespace bevnav
