#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nwcost {

struct TechnologyProfile;

/// Counts of the five canonical process steps per unit area.
struct ProcessStepCounts {
    int photolithography = 0;
    int diffusion = 0;
    int etching = 0;
    int deposition = 0;
    int implantation = 0;

    bool operator==(const ProcessStepCounts&) const = default;
};

/// Relative cost of each process step as a fraction of k_c.
struct CostWeights {
    double photolithography = 0.32;
    double diffusion = 0.22;
    double etching = 0.18;
    double deposition = 0.16;
    double implantation = 0.12;

    double sum() const { return photolithography + diffusion + etching + deposition + implantation; }
    /// Throws ConfigError unless each weight is in (0, 1) and they sum to 1.
    void validate() const;
};

enum class CostMode {
    Eq13Faithful,    // c_pd from the process-step counts
    PaperConstants,  // c_pd from the profile's published constant
};

std::string_view to_string(CostMode mode);
CostMode parse_cost_mode(std::string_view text);

/// Every component is in k_c * lambda^2.
struct CostBreakdown {
    double die = 0.0;
    double metal = 0.0;
    double bonding = 0.0;
    double cooling = 0.0;
    double total = 0.0;
    CostMode mode = CostMode::PaperConstants;
    double c_pd = 0.0;
    double c_pm = 0.0;
    bool c_pd_from_steps = true;
};

/// sum_i n_i w_i, in units of k_c.
double unit_area_process_cost(const ProcessStepCounts& steps, const CostWeights& weights = {});

/// Chip cost = c_pd A + c_pm n_m A + bonding A + cooling coefficient * T * A.
CostBreakdown chip_cost(const TechnologyProfile& tech, double die_area, int n_metal, CostMode mode,
                        const CostWeights& weights = {});

/// Pairwise reductions (1 - C_row / C_col) * 100.
struct ReductionMatrix {
    std::vector<std::string> technologies;
    std::vector<std::vector<double>> percent;

    double at(std::string_view row, std::string_view column) const;
};

/// ComparisonError when fewer than two technologies are given or a total is zero.
ReductionMatrix compare_costs(const std::map<std::string, CostBreakdown>& breakdowns);

}  // namespace nwcost
