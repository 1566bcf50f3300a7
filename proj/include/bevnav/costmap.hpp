#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bevnav/raster.hpp"

namespace bevnav {

struct CostClass {
    std::string name;
    double cost = 0.0;
};

// Class id -> traversal cost table. Unlisted ids fall back to default_cost,
// except the reserved out-of-view class which takes out_of_view_cost. The
// cheapest listed class must cost more than zero or the planner heuristic
// loses admissibility.
struct CostConfig {
    std::map<std::uint8_t, CostClass> entries;
    double default_cost = 16.0;
    double out_of_view_cost = 64.0;

    double cost_for(std::uint8_t class_id) const;
    double min_entry_cost() const;
    void validate() const;

    // carpet(0)=1, obstacle(1)=64, hardwood(2)=4; keeps carpet < hardwood <<
    // obstacle and c_min = 1 so the plain Manhattan heuristic stays admissible.
    static CostConfig default_config();
};

CostMap apply_costs(const LabelImage& labels, const CostConfig& cfg, CostMap::Space space);

}  // namespace bevnav
