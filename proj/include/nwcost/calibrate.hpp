#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nwcost/cost.hpp"
#include "nwcost/techlib.hpp"

namespace nwcost {

/// What the calibrated library must reproduce. Defaults are the published
/// metal-layer matrix and cost reductions.
struct CalibrationTargets {
    std::vector<double> gate_counts{5e6, 10e6, 20e6};
    /// Expected metal layer count per technology, one entry per gate count.
    std::map<std::string, std::vector<int>> metal_layers{
        {"cmos2d", {5, 6, 7}},
        {"tsv3d", {5, 5, 6}},
        {"m3d", {3, 4, 5}},
        {"sn3d", {3, 3, 4}},
    };
    /// Cost reductions (percent) of `reference` against each listed technology.
    std::string reference = "sn3d";
    std::map<std::string, double> cost_reductions{{"cmos2d", 70.0}, {"tsv3d", 67.0}, {"m3d", 68.0}};
    double reduction_tolerance = 3.0;
    CostMode mode = CostMode::PaperConstants;
    /// Band (percent) for the reference's metal-interconnect reduction
    /// 1 - n^(p-1); p is moved into it when outside.
    std::optional<std::pair<double, double>> interconnect_reduction_band = std::make_pair(54.0, 55.0);
};

struct CalibrationBounds {
    double efficiency_min = 0.2;
    double efficiency_max = 0.8;
    int efficiency_steps = 25;
    double pitch_scale_min = 0.1;
    double pitch_scale_max = 2.0;
    int pitch_scale_steps = 40;
    int stack_layers = 12;
    double bonding_max = 20.0;
    double cooling_max = 10.0;
};

struct StackCalibration {
    std::string technology;
    bool adjusted = false;
    double routing_efficiency = 0.0;
    double pitch_scale = 0.0;
    std::vector<int> achieved;
    std::vector<int> target;
    int violations = 0;  // sum of |achieved - target|
};

struct ReductionResidual {
    std::string against;
    double n_gates = 0.0;
    double achieved = 0.0;
    double target = 0.0;
};

struct CalibrationReport {
    double p_before = 0.0;
    double p_after = 0.0;
    double interconnect_reduction = 0.0;  // percent, at p_after
    std::vector<StackCalibration> stacks;
    bool cost_adjusted = false;
    double bonding_per_area = 0.0;
    std::map<std::string, double> cooling_coefficients;
    std::vector<ReductionResidual> reductions;
    double reduction_sse = 0.0;
    double max_reduction_deviation = 0.0;
};

/// Grid-then-refine search over per-technology stack knobs (uniform routing
/// efficiency and pitch scale of the tiered stack) followed by the cost knobs
/// (bonding per area shared by stacked-die profiles, cooling coefficient per
/// profile). Profiles that already meet their targets are left untouched.
///
/// Throws InfeasibleTargetsError when a metal-layer entry cannot be met
/// within +-1 anywhere inside the bounds.
std::pair<TechnologyLibrary, CalibrationReport> calibrate(const TechnologyLibrary& library,
                                                          const CalibrationTargets& targets = {},
                                                          const CalibrationBounds& bounds = {});

std::string calibration_report_to_text(const CalibrationReport& report);

}  // namespace nwcost
