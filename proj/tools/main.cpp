#include <CLI11.hpp>
#include <string>

#include "bevnav/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bevnav: semantic label frames to ground-plane navigation paths"};
    app.require_subcommand(1);

    std::string calib_json;
    std::string calib_out = "homography.json";
    auto* calibrate = app.add_subcommand(
        "calibrate", "Estimate the perspective-to-BEV homography from four point pairs");
    calibrate->add_option("calibration", calib_json, "calibration JSON with src/dst points")
        ->required();
    calibrate->add_option("--out", calib_out, "homography cache output path");

    bevnav::PlanArgs plan_args;
    auto* plan = app.add_subcommand("plan", "Plan a path for one label frame");
    plan->add_option("label", plan_args.label_png, "8-bit single-channel label PNG")->required();
    plan->add_option("--config", plan_args.config, "pipeline config JSON")->required();
    plan->add_option("--out", plan_args.out_json, "path JSON output")->required();
    plan->add_option("--frame", plan_args.frame_png, "color frame for the overlay");
    plan->add_option("--overlay", plan_args.overlay_png, "overlay PNG output");

    std::string results_dir;
    std::string labels_dir;
    std::string eval_format = "csv";
    std::string eval_out;
    auto* eval = app.add_subcommand("eval", "Compare planned paths against annotated label paths");
    eval->add_option("--results", results_dir, "directory of planned path JSON files")->required();
    eval->add_option("--labels", labels_dir, "directory of annotated path JSON files")->required();
    eval->add_option("--format", eval_format, "table format")
        ->check(CLI::IsMember({"csv", "markdown"}));
    eval->add_option("--out", eval_out, "also write the table to this file");

    std::string frames_dir;
    std::string batch_config;
    std::string batch_out;
    bool batch_timings = false;
    auto* batch = app.add_subcommand("batch", "Process a directory of label frames in order");
    batch->add_option("--frames", frames_dir, "directory of label PNGs (NNNN.png, optional NNNN_rgb.png)")
        ->required();
    batch->add_option("--config", batch_config, "pipeline config JSON")->required();
    batch->add_option("--out", batch_out, "output directory")->required();
    batch->add_flag("--timings", batch_timings, "record per-frame wall time in the manifest");

    std::string scene_json;
    std::string gen_out;
    std::string gen_config;
    auto* gen = app.add_subcommand("gen", "Generate synthetic scene fixtures with ground truth");
    gen->add_option("scene", scene_json, "scene spec JSON")->required();
    gen->add_option("--out", gen_out, "output directory")->required();
    gen->add_option("--config", gen_config, "pipeline config used for perspective view and truth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (calibrate->parsed()) return bevnav::cmd_calibrate(calib_json, calib_out);
    if (plan->parsed()) return bevnav::cmd_plan(plan_args);
    if (eval->parsed()) {
        const auto format =
            eval_format == "markdown" ? bevnav::TableFormat::markdown : bevnav::TableFormat::csv;
        return bevnav::cmd_eval(results_dir, labels_dir, format, eval_out);
    }
    if (batch->parsed()) return bevnav::cmd_batch(frames_dir, batch_config, batch_out, batch_timings);
    if (gen->parsed()) return bevnav::cmd_gen(scene_json, gen_out, gen_config);
    return 2;
}
