#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "nwcost/errors.hpp"
#include "nwcost/metal_stack.hpp"
#include "nwcost/projection.hpp"
#include "nwcost/techlib.hpp"
#include "support.hpp"

using namespace nwcost;
using test::rel_close;

namespace {

const TechnologyLibrary kLib = builtin_library();

int layers_with(const TechnologyProfile& tech, const RentParameters& rent, double n,
                const std::vector<MetalLayerSpec>& stack) {
    const auto dist = distribution_for(tech, rent, n);
    return estimate_metal_layers(dist, die_area(tech, n, rent).total, gate_pitch(tech), stack, rent).layers_used;
}

}  // namespace

TEST_CASE("sharing factor") {
    CHECK(sharing_factor(3.0) == 2.0 / 3.0);
    CHECK(sharing_factor(1.0) == 1.0);
}

TEST_CASE("via blockout area") {
    const MetalLayerSpec layer{4.0, 0.4, 16.0};
    CHECK(via_blockout_area(layer, 1e6, 3.0, 2.5e6) == 1.6e7);
    CHECK(via_blockout_area(layer, 1e6, 3.0, 3e6) == 0.0);
    CHECK(via_blockout_area(layer, 1e6, 3.0, 0.0) == 2 * 16.0 * 3e6);
    CHECK_THROWS_AS(via_blockout_area(layer, 1e6, 3.0, 3.1e6), ConsistencyError);
}

TEST_CASE("available routing length") {
    CHECK(layer_available_length({8.0, 0.4, 64.0}, 1e6, 1e5) == 37500.0);
    CHECK(layer_available_length({8.0, 0.4, 64.0}, 1e6, 4e5) == 0.0);
    CHECK(layer_available_length({8.0, 0.4, 64.0}, 1e6, 9e5) == 0.0);
    CHECK(layer_available_length({1.0, 1.0, 0.0}, 12345.0, 0.0) == 12345.0);
}

TEST_CASE("tiered stack pattern") {
    const auto stack = tiered_stack(0.5, 1.0);
    const std::vector<double> expected{8, 8, 12, 12, 16, 16, 24, 24, 32, 32, 48, 48};
    REQUIRE(stack.size() == expected.size());
    for (std::size_t i = 0; i < stack.size(); ++i) {
        CHECK(stack[i].wire_pitch == expected[i]);
        CHECK(stack[i].via_blockout == expected[i] * expected[i]);
        CHECK(stack[i].routing_efficiency == 0.5);
    }
    CHECK(tiered_stack(0.4, 0.5, 3)[2].wire_pitch == 6.0);
}

TEST_CASE("empty distribution needs one layer") {
    const RentParameters rent(4.0, 0.6, 3.0);
    const auto dist = WirelengthDistribution::make(3.0, 4.0, rent);
    const auto plan = estimate_metal_layers(dist, 1e4, 55.9, tiered_stack(0.4, 1.0), rent);
    CHECK(plan.layers_used == 1);
    CHECK(plan.routed_total() == 0.0);
}

TEST_CASE("metal-layer matrix of the built-in library") {
    const std::vector<double> gates{5e6, 10e6, 20e6};
    const std::map<std::string, std::vector<int>> expected{
        {"cmos2d", {5, 6, 7}}, {"tsv3d", {5, 5, 6}}, {"m3d", {3, 4, 5}}, {"sn3d", {3, 3, 4}}};
    for (const auto& [name, counts] : expected)
        for (std::size_t i = 0; i < gates.size(); ++i) {
            CAPTURE(name);
            CAPTURE(gates[i]);
            CHECK(metal_layers_for(kLib.profile(name), kLib.rent, gates[i]) == counts[i]);
        }
}

TEST_CASE("cross-technology ordering at the reference sizes") {
    for (double n : {5e6, 10e6, 20e6}) {
        const int sn = metal_layers_for(kLib.profile("sn3d"), kLib.rent, n);
        const int m3 = metal_layers_for(kLib.profile("m3d"), kLib.rent, n);
        const int t3 = metal_layers_for(kLib.profile("tsv3d"), kLib.rent, n);
        const int d2 = metal_layers_for(kLib.profile("cmos2d"), kLib.rent, n);
        CHECK(sn <= m3);
        CHECK(m3 <= t3);
        CHECK(t3 <= d2);
    }
}

TEST_CASE("plan structure: contiguous segments, capacity respected, length conserved") {
    for (const auto& [name, tech] : kLib.profiles)
        for (double n : {1e5, 5e6, 2e7}) {
            const auto dist = distribution_for(tech, kLib.rent, n);
            const double area = die_area(tech, n, kLib.rent).total;
            const double pitch = gate_pitch(tech);
            const auto plan = estimate_metal_layers(dist, area, pitch, tech.metal_stack, kLib.rent);
            REQUIRE(plan.per_layer.size() == static_cast<std::size_t>(plan.layers_used));
            CHECK(plan.per_layer.front().l_start == 1.0);
            CHECK(plan.per_layer.back().l_end == dist.max_length());
            for (std::size_t i = 0; i < plan.per_layer.size(); ++i) {
                const auto& a = plan.per_layer[i];
                CHECK(a.l_end >= a.l_start);
                CHECK(a.routed_length <= a.available_length * (1 + 1e-12));
                if (i > 0) CHECK(a.l_start == plan.per_layer[i - 1].l_end);
            }
            const double expected = sharing_factor(kLib.rent.fanout()) * pitch * dist.cumulative_length(dist.max_length());
            CHECK(rel_close(plan.routed_total(), expected, 1e-9));
            CHECK(plan.unrouted_remainder == 0.0);
        }
}

TEST_CASE("property: more gates never need fewer layers") {
    auto g = test::rng(30);
    for (const auto& [name, tech] : kLib.profiles) {
        std::vector<double> ns;
        for (int i = 0; i < 25; ++i) ns.push_back(test::log_uniform(g, 1e4, 5e7));
        std::sort(ns.begin(), ns.end());
        int last = 1;
        for (double n : ns) {
            const int now = metal_layers_for(tech, kLib.rent, n);
            CAPTURE(name);
            CAPTURE(n);
            CHECK(now >= last);
            last = now;
        }
    }
}

TEST_CASE("property: more capacity never needs more layers") {
    auto g = test::rng(31);
    const RentParameters rent = kLib.rent;
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto& tech = std::next(kLib.profiles.begin(), trial % 4)->second;
        const double n = test::log_uniform(g, 1e5, 3e7);
        const double mu = test::uniform(g, 0.2, 0.7);
        const double scale = test::log_uniform(g, 0.1, 1.0);
        const bool widen = g() % 2;
        const double mu2 = widen ? std::min(1.0, mu * test::uniform(g, 1.0, 1.4)) : mu;
        const double scale2 = widen ? scale : scale / test::uniform(g, 1.0, 1.5);
        int base = 0;
        try {
            base = layers_with(tech, rent, n, tiered_stack(mu, scale));
        } catch (const StuckProgressError&) {
            continue;
        }
        ++compared;
        CHECK(layers_with(tech, rent, n, tiered_stack(mu2, scale2)) <= base);
    }
    CHECK(compared > 30);
}

TEST_CASE("stack exhaustion repeats the top layer") {
    const auto& tech = kLib.profile("cmos2d");
    const auto full = tech.metal_stack;
    const std::vector<MetalLayerSpec> one{full.front()};
    std::vector<MetalLayerSpec> repeated(20, full.front());
    CHECK(layers_with(tech, kLib.rent, 1e6, one) == layers_with(tech, kLib.rent, 1e6, repeated));
}

TEST_CASE("errors") {
    const auto& tech = kLib.profile("cmos2d");
    const auto dist = distribution_for(tech, kLib.rent, 5e6);
    const double area = die_area(tech, 5e6, kLib.rent).total;
    CHECK_THROWS_AS(estimate_metal_layers(dist, area, 55.9, std::vector<MetalLayerSpec>{}, kLib.rent), ConfigError);
    CHECK_THROWS_AS(estimate_metal_layers(dist, 0.0, 55.9, tech.metal_stack, kLib.rent), DomainError);
    // via blockout alone saturates every layer
    CHECK_THROWS_AS(estimate_metal_layers(dist, area, 55.9, tiered_stack(0.05, 4.0), kLib.rent), StuckProgressError);
    CHECK_THROWS_AS(estimate_metal_layers(dist, area, 55.9, tech.metal_stack, kLib.rent, 1),
                    StuckProgressError);
}
