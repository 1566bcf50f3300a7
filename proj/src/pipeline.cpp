#include "bevnav/pipeline.hpp"

#include "bevnav/costmap.hpp"
#include "bevnav/errors.hpp"

namespace bevnav {

PlanOutcome run_plan(const LabelImage& labels, const PipelineConfig& cfg) {
    cfg.costs.validate();

    const LabelImage working = cfg.crop ? crop(labels, *cfg.crop) : labels;
    const Homography h = estimate(cfg.correspondences);

    CostMap bev_costs;
    if (cfg.order == PipelineConfig::Order::warp_then_cost) {
        if (cfg.sampling != Sampling::nearest) {
            throw Error(Stage::warp, "warp-then-cost order warps label ids and requires nearest sampling");
        }
        const LabelImage bev_labels = warp(working, h, cfg.canvas, cfg.sampling);
        bev_costs = apply_costs(bev_labels, cfg.costs, CostMap::Space::bev);
    } else {
        const CostMap persp_costs = apply_costs(working, cfg.costs, CostMap::Space::perspective);
        bev_costs = warp(persp_costs, h, cfg.canvas, cfg.sampling, cfg.costs.out_of_view_cost);
    }

    PlanProblem problem = PlanProblem::with_default_endpoints(pool(bev_costs, cfg.grid));
    if (cfg.start) problem.start = *cfg.start;
    if (cfg.goal) problem.goal = *cfg.goal;

    PlanOutcome outcome;
    outcome.path = astar(problem);
    outcome.record = make_record(problem, outcome.path);
    outcome.grid = std::move(problem.grid);
    outcome.homography = h;
    return outcome;
}

}  // namespace bevnav
