#include "bevnav/costmap.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "bevnav/errors.hpp"

namespace bevnav {

double CostConfig::cost_for(std::uint8_t class_id) const {
    const auto it = entries.find(class_id);
    if (it != entries.end()) return it->second.cost;
    if (class_id == kOutOfViewClass) return out_of_view_cost;
    return default_cost;
}

double CostConfig::min_entry_cost() const {
    double min_cost = std::numeric_limits<double>::infinity();
    for (const auto& [id, cls] : entries) min_cost = std::min(min_cost, cls.cost);
    return min_cost;
}

void CostConfig::validate() const {
    auto check = [](double v, const std::string& what) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error(Stage::config, what + " must be finite and non-negative");
        }
    };
    check(default_cost, "default_cost");
    check(out_of_view_cost, "out_of_view_cost");
    for (const auto& [id, cls] : entries) {
        check(cls.cost, "cost of class " + std::to_string(id));
    }
    if (entries.empty() || min_entry_cost() <= 0.0) {
        throw Error(Stage::config,
                    "cost config needs at least one class with cost > 0 (minimum traversable cost)");
    }
}

CostConfig CostConfig::default_config() {
    CostConfig cfg;
    cfg.entries[0] = {"carpet", 1.0};
    cfg.entries[1] = {"obstacle", 64.0};
    cfg.entries[2] = {"hardwood", 4.0};
    cfg.default_cost = 16.0;
    cfg.out_of_view_cost = 64.0;
    return cfg;
}

CostMap apply_costs(const LabelImage& labels, const CostConfig& cfg, CostMap::Space space) {
    cfg.validate();

    std::array<double, 256> lut;
    for (int id = 0; id < 256; ++id) lut[id] = cfg.cost_for(static_cast<std::uint8_t>(id));

    CostMap out;
    out.width = labels.width;
    out.height = labels.height;
    out.space = space;
    out.data.resize(labels.data.size());
    for (std::size_t i = 0; i < labels.data.size(); ++i) out.data[i] = lut[labels.data[i]];
    return out;
}

}  // namespace bevnav
