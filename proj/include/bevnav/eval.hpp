#pragma once

#include <string>
#include <vector>

#include "bevnav/planner.hpp"

namespace bevnav {

// One row of the four-column comparison report.
struct EvalRow {
    std::string scene;
    int steps_in_result = 0;
    int steps_in_label = 0;
    int matching_steps = 0;
    int different_steps = 0;
};

enum class TableFormat { csv, markdown };

// A label move matches when the cell it enters lies anywhere on the result
// path (set membership, not positional alignment); different steps are the
// remaining label moves. Both paths must be valid on the same grid spec.
EvalRow compare_paths(const PathRecord& result, const PathRecord& label);

// Renders rows in the given order under the fixed header Scene / Steps in
// result / Steps in label / Matching steps / Different steps.
std::string emit_table(const std::vector<EvalRow>& rows, TableFormat format);

}  // namespace bevnav
