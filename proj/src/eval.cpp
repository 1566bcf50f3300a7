#include "bevnav/eval.hpp"

#include <set>
#include <sstream>

#include "bevnav/errors.hpp"

namespace bevnav {

EvalRow compare_paths(const PathRecord& result, const PathRecord& label) {
    if (!(result.grid == label.grid)) {
        throw Error(Stage::eval, "result and label paths use different grid specs");
    }
    validate_path_record(result);
    validate_path_record(label);

    std::set<std::pair<int, int>> result_cells;
    for (const Cell& cell : result.cells) result_cells.insert({cell.row, cell.col});

    int matching = 0;
    for (std::size_t i = 1; i < label.cells.size(); ++i) {
        if (result_cells.count({label.cells[i].row, label.cells[i].col})) ++matching;
    }

    EvalRow row;
    row.scene = label.scene.empty() ? result.scene : label.scene;
    row.steps_in_result = result.steps;
    row.steps_in_label = label.steps;
    row.matching_steps = matching;
    row.different_steps = label.steps - matching;
    return row;
}

std::string emit_table(const std::vector<EvalRow>& rows, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "Scene,Steps in result,Steps in label,Matching steps,Different steps\n";
        for (const EvalRow& row : rows) {
            out << row.scene << ',' << row.steps_in_result << ',' << row.steps_in_label << ','
                << row.matching_steps << ',' << row.different_steps << '\n';
        }
    } else {
        out << "| Scene | Steps in result | Steps in label | Matching steps | Different steps |\n";
        out << "| --- | --- | --- | --- | --- |\n";
        for (const EvalRow& row : rows) {
            out << "| " << row.scene << " | " << row.steps_in_result << " | " << row.steps_in_label
                << " | " << row.matching_steps << " | " << row.different_steps << " |\n";
        }
    }
    return out.str();
}

}  // namespace bevnav
