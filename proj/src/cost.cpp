#include "nwcost/cost.hpp"

#include <algorithm>
#include <cmath>

#include "nwcost/errors.hpp"
#include "nwcost/technology.hpp"

namespace nwcost {

void CostWeights::validate() const {
    for (double w : {photolithography, diffusion, etching, deposition, implantation})
        if (!(w > 0.0 && w < 1.0)) throw ConfigError("process-step cost weights must lie in (0, 1)");
    if (std::abs(sum() - 1.0) > 1e-12) throw ConfigError("process-step cost weights must sum to 1");
}

std::string_view to_string(CostMode mode) {
    return mode == CostMode::Eq13Faithful ? "eq13" : "paper-constants";
}

CostMode parse_cost_mode(std::string_view text) {
    if (text == "eq13" || text == "eq13-faithful") return CostMode::Eq13Faithful;
    if (text == "paper-constants") return CostMode::PaperConstants;
    throw UsageError("unknown cost mode '" + std::string(text) + "' (expected paper-constants or eq13)");
}

double unit_area_process_cost(const ProcessStepCounts& steps, const CostWeights& weights) {
    return weights.photolithography * steps.photolithography + weights.diffusion * steps.diffusion +
           weights.etching * steps.etching + weights.deposition * steps.deposition +
           weights.implantation * steps.implantation;
}

CostBreakdown chip_cost(const TechnologyProfile& tech, double die_area, int n_metal, CostMode mode,
                        const CostWeights& weights) {
    if (!(die_area >= 0.0)) throw DomainError("die area must be non-negative");
    if (n_metal < 1) throw DomainError("metal layer count must be >= 1");
    for (double v : {tech.bonding_per_area, tech.cooling_coefficient, tech.relative_temperature})
        if (!(v >= 0.0)) throw ConfigError("profile '" + tech.name + "' has a negative cost constant");

    CostBreakdown cost;
    cost.mode = mode;
    cost.c_pm = unit_area_process_cost(tech.metal_steps, weights);
    if (mode == CostMode::PaperConstants && tech.paper_cpd) {
        cost.c_pd = *tech.paper_cpd;
        cost.c_pd_from_steps = false;
    } else {
        cost.c_pd = unit_area_process_cost(tech.die_steps, weights);
        cost.c_pd_from_steps = true;
    }
    cost.die = cost.c_pd * die_area;
    cost.metal = cost.c_pm * n_metal * die_area;
    cost.bonding = tech.tiers > 1 ? tech.bonding_per_area * die_area : 0.0;
    cost.cooling = tech.cooling_coefficient * tech.relative_temperature * die_area;
    cost.total = cost.die + cost.metal + cost.bonding + cost.cooling;
    return cost;
}

double ReductionMatrix::at(std::string_view row, std::string_view column) const {
    const auto r = std::find(technologies.begin(), technologies.end(), row);
    const auto c = std::find(technologies.begin(), technologies.end(), column);
    if (r == technologies.end() || c == technologies.end())
        throw UsageError("technology not present in reduction matrix");
    return percent[r - technologies.begin()][c - technologies.begin()];
}

ReductionMatrix compare_costs(const std::map<std::string, CostBreakdown>& breakdowns) {
    if (breakdowns.size() < 2) throw ComparisonError("cost comparison needs at least two technologies");
    ReductionMatrix matrix;
    for (const auto& [name, cost] : breakdowns) {
        if (!(cost.total > 0.0)) throw ComparisonError("technology '" + name + "' has a zero total cost");
        matrix.technologies.push_back(name);
    }
    for (const auto& [row_name, row] : breakdowns) {
        std::vector<double> values;
        for (const auto& [col_name, col] : breakdowns) values.push_back((1.0 - row.total / col.total) * 100.0);
        matrix.percent.push_back(std::move(values));
    }
    return matrix;
}

}  // namespace nwcost
