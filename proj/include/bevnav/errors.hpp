#pragma once

#include <stdexcept>
#include <string>

namespace bevnav {

// Pipeline stage attached to every error; the CLI prefixes messages with it.
enum class Stage {
    io,
    config,
    calibration,
    warp,
    cost,
    grid,
    plan,
    eval,
    render,
};

const char* stage_name(Stage stage);

class Error : public std::runtime_error {
public:
    Error(Stage stage, const std::string& message)
        : std::runtime_error(message), stage_(stage) {}

    Stage stage() const { return stage_; }

    // "[plan] start cell out of bounds" style message for the CLI.
    std::string tagged() const {
        return std::string("[") + stage_name(stage_) + "] " + what();
    }

private:
    Stage stage_;
};

}  // namespace bevnav
