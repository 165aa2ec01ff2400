#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "json.hpp"
#include "nwcost/calibrate.hpp"
#include "nwcost/errors.hpp"
#include "nwcost/projection.hpp"
#include "nwcost/techlib.hpp"

using namespace nwcost;

TEST_CASE("a library that already meets its targets is returned unchanged") {
    const auto lib = builtin_library();
    const auto [out, report] = calibrate(lib);
    CHECK(out == lib);
    CHECK(report.p_before == report.p_after);
    CHECK(!report.cost_adjusted);
    for (const auto& s : report.stacks) {
        CHECK(!s.adjusted);
        CHECK(s.violations == 0);
        CHECK(s.achieved == s.target);
    }
    CHECK(report.max_reduction_deviation <= 3.0);
}

TEST_CASE("targets equal to the achieved values leave zero residual") {
    const auto lib = builtin_library();
    const double n = 10e6;
    CalibrationTargets targets;
    targets.gate_counts = {n};
    const double ref = project(lib, "sn3d", n).cost_paper.total;
    for (auto& [name, pct] : targets.cost_reductions)
        pct = (1.0 - ref / project(lib, name, n).cost_paper.total) * 100;
    for (auto& [name, counts] : targets.metal_layers) counts = {metal_layers_for(lib.profile(name), lib.rent, n)};
    const auto [out, report] = calibrate(lib, targets);
    CHECK(out == lib);
    CHECK(report.reduction_sse < 1e-20);
    for (const auto& s : report.stacks) CHECK(s.violations == 0);
}

TEST_CASE("the uncalibrated library calibrates to the built-in knobs") {
    const auto [out, report] = calibrate(uncalibrated_library());
    CHECK(report.p_before == 0.6);
    CHECK(report.p_after == 0.66);
    CHECK(report.interconnect_reduction == doctest::Approx(54.2912).epsilon(1e-5));
    CHECK(report.cost_adjusted);
    CHECK(report.max_reduction_deviation <= 3.0);
    for (const auto& s : report.stacks) {
        CHECK(s.adjusted);
        CHECK(s.achieved == s.target);
    }
    auto builtin = builtin_library();
    auto got = out;
    got.library_version = builtin.library_version;
    CHECK(got == builtin);
    CHECK(out.library_version == "builtin-uncalibrated-1+calibrated");
}

TEST_CASE("calibration is deterministic") {
    const auto a = calibrate(uncalibrated_library());
    const auto b = calibrate(uncalibrated_library());
    CHECK(a.first == b.first);
    CHECK(calibration_report_to_text(a.second) == calibration_report_to_text(b.second));
}

TEST_CASE("impossible targets") {
    CalibrationTargets zero;
    zero.metal_layers["sn3d"] = {0, 3, 4};
    CHECK_THROWS_AS(calibrate(builtin_library(), zero), InfeasibleTargetsError);

    CalibrationTargets deep;
    deep.metal_layers = {{"cmos2d", {40, 40, 40}}};
    deep.cost_reductions.clear();
    CHECK_THROWS_AS(calibrate(builtin_library(), deep), InfeasibleTargetsError);

    CalibrationTargets ragged;
    ragged.metal_layers["sn3d"] = {3, 3};
    CHECK_THROWS_AS(calibrate(builtin_library(), ragged), InfeasibleTargetsError);

    CalibrationTargets none;
    none.gate_counts.clear();
    CHECK_THROWS_AS(calibrate(builtin_library(), none), InfeasibleTargetsError);

    CalibrationTargets unknown;
    unknown.metal_layers["cmos3d"] = {1, 1, 1};
    CHECK_THROWS_AS(calibrate(builtin_library(), unknown), ConfigError);
}

TEST_CASE("report document") {
    const auto [out, report] = calibrate(uncalibrated_library());
    const auto doc = nlohmann::json::parse(calibration_report_to_text(report));
    CHECK(doc.at("schema") == "nwcost.calibration/1");
    CHECK(doc.at("stacks").size() == 4);
    CHECK(doc.at("reductions").size() == 9);
    CHECK(doc.at("rent_p").at("after") == 0.66);
    for (const auto& r : doc.at("reductions"))
        CHECK(std::abs(r.at("residual").get<double>()) <= 3.0);
}
