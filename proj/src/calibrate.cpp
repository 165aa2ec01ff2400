#include "nwcost/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "nwcost/errors.hpp"
#include "nwcost/projection.hpp"

namespace nwcost {

namespace {

constexpr int kStuckPenalty = 1000;

double round_significant(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(value)))));
    return std::round(value * scale) / scale;
}

double interconnect_reduction(int layers, double p) { return (1.0 - std::pow(layers, p - 1.0)) * 100.0; }

// Metal layer counts of one profile across the target gate counts, with the
// stack-independent parts (distribution, die area, pitch) computed once.
class StackEvaluator {
public:
    StackEvaluator(const TechnologyProfile& tech, const RentParameters& rent, const std::vector<double>& gates)
        : rent_(rent), pitch_(gate_pitch(tech)) {
        for (double n : gates) {
            dists_.push_back(distribution_for(tech, rent, n));
            areas_.push_back(die_area(tech, n, rent).total);
        }
    }

    std::vector<int> counts(const std::vector<MetalLayerSpec>& stack) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < dists_.size(); ++i) {
            try {
                out.push_back(estimate_metal_layers(dists_[i], areas_[i], pitch_, stack, rent_).layers_used);
            } catch (const StuckProgressError&) {
                out.push_back(kStuckPenalty);
            }
        }
        return out;
    }

private:
    RentParameters rent_;
    double pitch_;
    std::vector<WirelengthDistribution> dists_;
    std::vector<double> areas_;
};

struct StackScore {
    int violations = std::numeric_limits<int>::max();
    int max_deviation = std::numeric_limits<int>::max();
    std::vector<int> achieved;
};

StackScore score(const std::vector<int>& achieved, const std::vector<int>& target) {
    StackScore s;
    s.violations = 0;
    s.max_deviation = 0;
    s.achieved = achieved;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const int d = std::abs(achieved[i] - target[i]);
        s.violations += d;
        s.max_deviation = std::max(s.max_deviation, d);
    }
    return s;
}

StackCalibration calibrate_stack(TechnologyProfile& tech, const RentParameters& rent,
                                 const CalibrationTargets& targets, const std::vector<int>& target,
                                 const CalibrationBounds& bounds) {
    const StackEvaluator eval(tech, rent, targets.gate_counts);
    StackCalibration result;
    result.technology = tech.name;
    result.target = target;
    result.routing_efficiency = tech.metal_stack.front().routing_efficiency;
    result.pitch_scale = tech.metal_stack.front().wire_pitch / 8.0;

    const auto current = score(eval.counts(tech.metal_stack), target);
    if (current.violations == 0) {
        result.achieved = current.achieved;
        return result;
    }

    const int ne = std::max(bounds.efficiency_steps, 2);
    const int ns = std::max(bounds.pitch_scale_steps, 2);
    auto efficiency_at = [&](double i) {
        return bounds.efficiency_min + (bounds.efficiency_max - bounds.efficiency_min) * i / (ne - 1);
    };
    auto scale_at = [&](double j) {
        return bounds.pitch_scale_min * std::pow(bounds.pitch_scale_max / bounds.pitch_scale_min, j / (ns - 1));
    };
    auto evaluate = [&](double mu, double scale) {
        return score(eval.counts(tiered_stack(mu, scale, bounds.stack_layers)), target);
    };

    std::vector<std::vector<StackScore>> grid(ne, std::vector<StackScore>(ns));
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ns; ++j) {
            grid[i][j] = evaluate(efficiency_at(i), scale_at(j));
            best = std::min(best, grid[i][j].violations);
        }

    const double mu0 = result.routing_efficiency;
    const double s0 = std::max(result.pitch_scale, 1e-12);
    auto distance = [&](double mu, double scale) {
        const double a = (mu - mu0) / (bounds.efficiency_max - bounds.efficiency_min);
        const double b = std::log(scale / s0) / std::log(bounds.pitch_scale_max / bounds.pitch_scale_min);
        return a * a + b * b;
    };

    // Prefer cells surrounded by other matching cells, then the smallest move.
    struct Pick {
        double mu, scale;
        StackScore s;
        int support;
        double dist;
    };
    std::optional<Pick> pick;
    auto consider = [&](const Pick& cand) {
        if (!pick || cand.s.violations < pick->s.violations ||
            (cand.s.violations == pick->s.violations &&
             (cand.support > pick->support || (cand.support == pick->support && cand.dist < pick->dist))))
            pick = cand;
    };
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ns; ++j) {
            if (grid[i][j].violations != best) continue;
            int support = 0;
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int a = i + di, b = j + dj;
                    if ((di || dj) && a >= 0 && a < ne && b >= 0 && b < ns && grid[a][b].violations == best)
                        ++support;
                }
            consider({efficiency_at(i), scale_at(j), grid[i][j], support, distance(efficiency_at(i), scale_at(j))});
        }

    if (pick->s.violations > 0) {
        // refine: finer sub-grid around every best coarse cell
        const int fine = 9;
        std::vector<std::pair<int, int>> seeds;
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ns; ++j)
                if (grid[i][j].violations == best) seeds.emplace_back(i, j);
        for (const auto& [i, j] : seeds)
            for (int a = 0; a < fine; ++a)
                for (int b = 0; b < fine; ++b) {
                    const double fi = std::clamp(i - 1.0 + 2.0 * a / (fine - 1), 0.0, ne - 1.0);
                    const double fj = std::clamp(j - 1.0 + 2.0 * b / (fine - 1), 0.0, ns - 1.0);
                    const double mu = efficiency_at(fi), scale = scale_at(fj);
                    consider({mu, scale, evaluate(mu, scale), 0, distance(mu, scale)});
                }
    }

    if (pick->s.max_deviation > 1)
        throw InfeasibleTargetsError("no stack within bounds reproduces the metal-layer targets of '" + tech.name +
                                     "' within +-1");

    // Commit short decimals when they give the same counts.
    double mu = pick->mu, scale = pick->scale;
    const double mu_r = std::round(mu * 1e4) / 1e4, scale_r = round_significant(scale, 4);
    const auto rounded = evaluate(mu_r, scale_r);
    if (rounded.achieved == pick->s.achieved) {
        mu = mu_r;
        scale = scale_r;
    }

    tech.metal_stack = tiered_stack(mu, scale, bounds.stack_layers);
    result.adjusted = true;
    result.routing_efficiency = mu;
    result.pitch_scale = scale;
    result.achieved = pick->s.achieved;
    result.violations = pick->s.violations;
    return result;
}

// Per-area cost coefficients of one technology at one gate count; everything
// except the bonding and cooling knobs is fixed once stacks are settled.
struct CostPoint {
    std::string tech;
    double area;
    double fixed_per_area;  // c_pd + c_pm n_m
    bool bonded;
    double temperature;
};

class CostObjective {
public:
    CostObjective(const TechnologyLibrary& lib, const CalibrationTargets& targets,
                  const std::vector<std::string>& knob_techs)
        : targets_(targets), knob_techs_(knob_techs) {
        for (double n : targets.gate_counts) {
            std::map<std::string, CostPoint> at_n;
            for (const auto& name : knob_techs) {
                const auto& tech = lib.profile(name);
                const auto proj = project(tech, lib.rent, n);
                const auto& c = proj.cost(targets.mode);
                at_n[name] = {name, proj.die.total, c.c_pd + c.c_pm * proj.metal.layers_used, tech.tiers > 1,
                              tech.relative_temperature};
            }
            points_.push_back(std::move(at_n));
        }
    }

    // x = [bonding, cooling(knob_techs[0]), cooling(knob_techs[1]), ...]
    double total(const CostPoint& p, const std::vector<double>& x) const {
        const auto idx = std::find(knob_techs_.begin(), knob_techs_.end(), p.tech) - knob_techs_.begin();
        return p.area * (p.fixed_per_area + (p.bonded ? x[0] : 0.0) + x[1 + idx] * p.temperature);
    }

    std::vector<ReductionResidual> residuals(const std::vector<double>& x) const {
        std::vector<ReductionResidual> out;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const double ref = total(points_[i].at(targets_.reference), x);
            for (const auto& [against, target] : targets_.cost_reductions) {
                const double other = total(points_[i].at(against), x);
                out.push_back({against, targets_.gate_counts[i], (1.0 - ref / other) * 100.0, target});
            }
        }
        return out;
    }

    double sse(const std::vector<double>& x) const {
        double s = 0.0;
        for (const auto& r : residuals(x)) s += (r.achieved - r.target) * (r.achieved - r.target);
        return s;
    }

private:
    const CalibrationTargets& targets_;
    std::vector<std::string> knob_techs_;
    std::vector<std::map<std::string, CostPoint>> points_;
};

std::vector<double> search_cost_knobs(const CostObjective& objective, const std::vector<double>& upper) {
    const std::size_t dims = upper.size();
    const int points = dims <= 5 ? 6 : 3;

    std::vector<double> best(dims, 0.0);
    double best_sse = objective.sse(best);
    std::vector<int> odometer(dims, 0);
    std::vector<double> x(dims);
    while (true) {
        for (std::size_t d = 0; d < dims; ++d) x[d] = upper[d] * odometer[d] / (points - 1);
        const double s = objective.sse(x);
        if (s < best_sse) {
            best_sse = s;
            best = x;
        }
        std::size_t d = 0;
        while (d < dims && ++odometer[d] == points) odometer[d++] = 0;
        if (d == dims) break;
    }

    // pattern search with step halving
    std::vector<double> step(dims);
    for (std::size_t d = 0; d < dims; ++d) step[d] = upper[d] / (points - 1) / 2.0;
    while (*std::max_element(step.begin(), step.end()) > 1e-7) {
        bool improved = false;
        for (std::size_t d = 0; d < dims; ++d)
            for (double dir : {-1.0, 1.0}) {
                auto trial = best;
                trial[d] = std::clamp(trial[d] + dir * step[d], 0.0, upper[d]);
                const double s = objective.sse(trial);
                if (s < best_sse - 1e-15) {
                    best_sse = s;
                    best = trial;
                    improved = true;
                }
            }
        if (!improved)
            for (double& s : step) s /= 2.0;
    }
    return best;
}

}  // namespace

std::pair<TechnologyLibrary, CalibrationReport> calibrate(const TechnologyLibrary& library,
                                                          const CalibrationTargets& targets,
                                                          const CalibrationBounds& bounds) {
    if (targets.gate_counts.empty()) throw InfeasibleTargetsError("no target gate counts given");
    for (double n : targets.gate_counts)
        if (!(n >= 1.0)) throw InfeasibleTargetsError("target gate counts must be >= 1");
    for (const auto& [name, counts] : targets.metal_layers) {
        library.profile(name);
        if (counts.size() != targets.gate_counts.size())
            throw InfeasibleTargetsError("metal-layer targets for '" + name + "' do not match the gate counts");
        for (int c : counts)
            if (c < 1) throw InfeasibleTargetsError("metal-layer target " + std::to_string(c) + " for '" + name +
                                                    "' is unreachable: every die has at least one metal layer");
    }
    if (!targets.cost_reductions.empty()) library.profile(targets.reference);
    for (const auto& [name, target] : targets.cost_reductions) library.profile(name);

    TechnologyLibrary lib = library;
    CalibrationReport report;
    report.p_before = lib.rent.p();
    report.p_after = lib.rent.p();

    // Rent exponent from the interconnect-reduction band.
    if (targets.interconnect_reduction_band && lib.profiles.count(targets.reference)) {
        const int layers = lib.profile(targets.reference).terminal_partition_layers();
        const auto [lo, hi] = *targets.interconnect_reduction_band;
        if (layers > 1) {
            const double now = interconnect_reduction(layers, lib.rent.p());
            if (now < lo || now > hi) {
                const double mid = 0.5 * (lo + hi);
                double p = 1.0 + std::log(1.0 - mid / 100.0) / std::log(static_cast<double>(layers));
                const double rounded = std::round(p * 100.0) / 100.0;
                const double r = interconnect_reduction(layers, rounded);
                if (r >= lo && r <= hi) p = rounded;
                if (!(p > 0.0 && p < 1.0)) throw InfeasibleTargetsError("interconnect band needs p outside (0, 1)");
                lib.rent = lib.rent.with_p(p);
            }
            report.interconnect_reduction = interconnect_reduction(layers, lib.rent.p());
        }
        report.p_after = lib.rent.p();
    }

    for (const auto& [name, counts] : targets.metal_layers)
        report.stacks.push_back(calibrate_stack(lib.profiles.at(name), lib.rent, targets, counts, bounds));

    if (!targets.cost_reductions.empty()) {
        std::vector<std::string> knob_techs{targets.reference};
        for (const auto& [name, target] : targets.cost_reductions)
            if (name != targets.reference) knob_techs.push_back(name);

        const CostObjective objective(lib, targets, knob_techs);
        std::vector<double> current{0.0};
        for (const auto& name : knob_techs) {
            const auto& tech = lib.profile(name);
            if (tech.tiers > 1) current[0] = tech.bonding_per_area;
            current.push_back(tech.cooling_coefficient);
        }

        bool satisfied = true;
        for (const auto& r : objective.residuals(current))
            satisfied = satisfied && std::abs(r.achieved - r.target) <= targets.reduction_tolerance;

        std::vector<double> chosen = current;
        if (!satisfied) {
            std::vector<double> upper{bounds.bonding_max};
            upper.resize(knob_techs.size() + 1, bounds.cooling_max);
            chosen = search_cost_knobs(objective, upper);
            for (double& v : chosen) v = round_significant(v, 4);
            for (std::size_t i = 0; i < knob_techs.size(); ++i) {
                auto& tech = lib.profiles.at(knob_techs[i]);
                tech.cooling_coefficient = chosen[1 + i];
                tech.bonding_per_area = tech.tiers > 1 ? chosen[0] : 0.0;
            }
            report.cost_adjusted = true;
        }
        report.bonding_per_area = chosen[0];
        for (std::size_t i = 0; i < knob_techs.size(); ++i) report.cooling_coefficients[knob_techs[i]] = chosen[1 + i];
        report.reductions = objective.residuals(chosen);
        for (const auto& r : report.reductions) {
            const double d = r.achieved - r.target;
            report.reduction_sse += d * d;
            report.max_reduction_deviation = std::max(report.max_reduction_deviation, std::abs(d));
        }
    }

    if (lib != library) lib.library_version = library.library_version + "+calibrated";
    lib.validate();
    return {lib, report};
}

std::string calibration_report_to_text(const CalibrationReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = "nwcost.calibration/1";
    doc["rent_p"] = {{"before", report.p_before}, {"after", report.p_after}};
    doc["interconnect_reduction_percent"] = report.interconnect_reduction;
    auto stacks = nlohmann::ordered_json::array();
    for (const auto& s : report.stacks)
        stacks.push_back({{"technology", s.technology},
                          {"adjusted", s.adjusted},
                          {"routing_efficiency", s.routing_efficiency},
                          {"pitch_scale", s.pitch_scale},
                          {"target", s.target},
                          {"achieved", s.achieved},
                          {"violations", s.violations}});
    doc["stacks"] = stacks;
    doc["cost_adjusted"] = report.cost_adjusted;
    doc["bonding_per_area"] = report.bonding_per_area;
    doc["cooling_coefficients"] = report.cooling_coefficients;
    auto reductions = nlohmann::ordered_json::array();
    for (const auto& r : report.reductions)
        reductions.push_back({{"against", r.against},
                              {"n_gates", r.n_gates},
                              {"achieved_percent", r.achieved},
                              {"target_percent", r.target},
                              {"residual", r.achieved - r.target}});
    doc["reductions"] = reductions;
    doc["reduction_sse"] = report.reduction_sse;
    doc["max_reduction_deviation"] = report.max_reduction_deviation;
    return doc.dump(2) + "\n";
}

}  // namespace nwcost
