#pragma once

#include <string>

#include "bevnav/eval.hpp"

namespace bevnav {

// Subcommand entry points shared by the CLI binary and the test suites.
// Return value is the process exit code: 0 success, 1 processing error,
// 2 usage/config error. Errors are printed to stderr tagged with their
// pipeline stage; nothing is written before the configuration validates.

struct PlanArgs {
    std::string label_png;
    std::string config;
    std::string out_json;
    std::string frame_png;    // optional color frame for the overlay
    std::string overlay_png;  // optional overlay output path
};

int cmd_calibrate(const std::string& calib_json, const std::string& out_path);
int cmd_plan(const PlanArgs& args);
int cmd_eval(const std::string& results_dir, const std::string& labels_dir, TableFormat format,
             const std::string& out_path = "");
int cmd_batch(const std::string& frames_dir, const std::string& config_path,
              const std::string& out_dir, bool timings = false);
int cmd_gen(const std::string& scene_json, const std::string& out_dir,
            const std::string& config_path = "");

}  // namespace bevnav
