#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bevnav/costmap.hpp"
#include "bevnav/errors.hpp"

using namespace bevnav;

TEST_CASE("apply_costs is a direct table lookup") {
    const CostConfig cfg = CostConfig::default_config();

    SUBCASE("all-carpet image maps to a uniform map") {
        const LabelImage labels = LabelImage::filled(6, 5, 0);
        const CostMap costs = apply_costs(labels, cfg, CostMap::Space::bev);
        CHECK(costs.width == 6);
        CHECK(costs.height == 5);
        CHECK(costs.space == CostMap::Space::bev);
        for (double v : costs.data) REQUIRE(v == 1.0);
    }
    SUBCASE("single obstacle pixel gets the obstacle cost") {
        LabelImage labels = LabelImage::filled(4, 4, 0);
        labels.at(2, 1) = 1;
        const CostMap costs = apply_costs(labels, cfg, CostMap::Space::perspective);
        for (int y = 0; y < 4; ++y) {
            for (int x = 0; x < 4; ++x) {
                REQUIRE(costs.at(x, y) == ((x == 2 && y == 1) ? 64.0 : 1.0));
            }
        }
    }
    SUBCASE("unlisted class ids fall back to the default cost") {
        const LabelImage labels = LabelImage::filled(3, 3, 9);
        const CostMap costs = apply_costs(labels, cfg, CostMap::Space::bev);
        for (double v : costs.data) REQUIRE(v == 16.0);
    }
    SUBCASE("the reserved class takes the out-of-view cost") {
        const LabelImage labels = LabelImage::filled(3, 3, kOutOfViewClass);
        const CostMap costs = apply_costs(labels, cfg, CostMap::Space::bev);
        for (double v : costs.data) REQUIRE(v == 64.0);
    }
}

TEST_CASE("apply_costs output range is the configured cost set") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> byte(0, 255);
    LabelImage labels = LabelImage::filled(32, 32, 0);
    for (auto& v : labels.data) v = static_cast<std::uint8_t>(byte(rng));

    const CostConfig cfg = CostConfig::default_config();
    std::set<double> allowed{cfg.default_cost, cfg.out_of_view_cost};
    for (const auto& [id, cls] : cfg.entries) allowed.insert(cls.cost);

    const CostMap costs = apply_costs(labels, cfg, CostMap::Space::bev);
    for (double v : costs.data) REQUIRE(allowed.count(v) == 1);
}

TEST_CASE("apply_costs is pointwise: permuting pixels permutes costs") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> cls(0, 3);
    LabelImage labels = LabelImage::filled(16, 16, 0);
    for (auto& v : labels.data) v = static_cast<std::uint8_t>(cls(rng));

    const CostConfig cfg = CostConfig::default_config();
    const CostMap base = apply_costs(labels, cfg, CostMap::Space::bev);

    std::vector<std::size_t> perm(labels.data.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    LabelImage shuffled = labels;
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled.data[i] = labels.data[perm[i]];
    const CostMap shuffled_costs = apply_costs(shuffled, cfg, CostMap::Space::bev);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        REQUIRE(shuffled_costs.data[i] == base.data[perm[i]]);
    }
}

TEST_CASE("raising one class cost never lowers any pixel") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> cls(0, 3);
    LabelImage labels = LabelImage::filled(20, 20, 0);
    for (auto& v : labels.data) v = static_cast<std::uint8_t>(cls(rng));

    CostConfig cfg = CostConfig::default_config();
    const CostMap before = apply_costs(labels, cfg, CostMap::Space::bev);
    cfg.entries[2].cost += 10.0;
    const CostMap after = apply_costs(labels, cfg, CostMap::Space::bev);
    for (std::size_t i = 0; i < before.data.size(); ++i) {
        REQUIRE(after.data[i] >= before.data[i]);
    }
}

TEST_CASE("cost config validation") {
    CostConfig cfg = CostConfig::default_config();
    CHECK_NOTHROW(cfg.validate());

    SUBCASE("negative costs are rejected") {
        cfg.entries[0].cost = -1.0;
        CHECK_THROWS_AS(cfg.validate(), Error);
    }
    SUBCASE("a zero minimum traversable cost is rejected") {
        cfg.entries[0].cost = 0.0;
        CHECK_THROWS_AS(cfg.validate(), Error);
    }
    SUBCASE("non-finite default cost is rejected") {
        cfg.default_cost = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(cfg.validate(), Error);
    }
    SUBCASE("an empty class table is rejected") {
        cfg.entries.clear();
        CHECK_THROWS_AS(cfg.validate(), Error);
    }
}
