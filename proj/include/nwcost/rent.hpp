#pragma once

namespace nwcost {

/// Rent's-rule complexity descriptors of a circuit. The sink fraction alpha
/// is always derived from the fan-out.
class RentParameters {
public:
    /// Standard logic-design values: k = 4, p = 0.6, f.o. = 3.
    RentParameters() = default;

    /// Throws DomainError unless k > 0, 0 < p <= 1 and fanout > 0. p = 1 is
    /// the saturation limit (no inter-block wiring); the wirelength model
    /// rejects it.
    RentParameters(double k, double p, double fanout);

    double k() const noexcept { return k_; }
    double p() const noexcept { return p_; }
    double fanout() const noexcept { return fanout_; }
    double alpha() const noexcept { return fanout_ / (fanout_ + 1.0); }

    RentParameters with_k(double k) const { return {k, p_, fanout_}; }
    RentParameters with_p(double p) const { return {k_, p, fanout_}; }

    bool operator==(const RentParameters&) const = default;

private:
    double k_ = 4.0;
    double p_ = 0.6;
    double fanout_ = 3.0;
};

/// Number of stacked device layers the gates are split across.
struct PartitionScheme {
    int n_layers = 1;
};

/// Split of the stacked-fabric terminals into metal terminals and
/// terminals consumed by in-fabric interconnect features.
struct TerminalSplit {
    double t_total = 0.0;
    double t_metal = 0.0;
    double t_fabric = 0.0;
    double k_metal = 0.0;
    double k_fabric = 0.0;
};

/// T = k * N^p.
double terminals(double n_gates, const RentParameters& rent);

/// alpha * k * N * (1 - N^(p-1)).
double total_interconnects(double n_gates, const RentParameters& rent);

TerminalSplit split_terminals(double n_gates, const RentParameters& rent, PartitionScheme part);

/// Interconnects absorbed by the fabric: total_interconnects evaluated with k_fabric.
double fabric_interconnect_count(double n_gates, const RentParameters& rent, PartitionScheme part);

/// Share of k that still reaches the metal stack when gates are split across
/// `layers` device layers: layers^(p-1).
double metal_terminal_fraction(int layers, double p);

}  // namespace nwcost
