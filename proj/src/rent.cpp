#include "nwcost/rent.hpp"

#include <cmath>
#include <string>

#include "nwcost/errors.hpp"

namespace nwcost {

RentParameters::RentParameters(double k, double p, double fanout) : k_(k), p_(p), fanout_(fanout) {
    if (!(std::isfinite(k) && k > 0.0))
        throw DomainError("Rent coefficient k must be positive, got " + std::to_string(k));
    if (!(std::isfinite(p) && p > 0.0 && p <= 1.0))
        throw DomainError("Rent exponent p must satisfy 0 < p <= 1, got " + std::to_string(p));
    if (!(std::isfinite(fanout) && fanout > 0.0))
        throw DomainError("fan-out must be positive, got " + std::to_string(fanout));
}

namespace {

void require_gates(double n_gates) {
    if (!(std::isfinite(n_gates) && n_gates >= 1.0))
        throw DomainError("n_gates must be >= 1, got " + std::to_string(n_gates));
}

void require_partition(double n_gates, PartitionScheme part) {
    if (part.n_layers < 1)
        throw DomainError("partition needs at least one layer, got " + std::to_string(part.n_layers));
    require_gates(n_gates);
    if (n_gates < part.n_layers)
        throw DomainError("n_gates (" + std::to_string(n_gates) + ") is below the layer count (" +
                          std::to_string(part.n_layers) + ")");
}

}  // namespace

double metal_terminal_fraction(int layers, double p) {
    if (layers < 1) throw DomainError("layer count must be >= 1, got " + std::to_string(layers));
    return std::pow(static_cast<double>(layers), p - 1.0);
}

double terminals(double n_gates, const RentParameters& rent) {
    require_gates(n_gates);
    return rent.k() * std::pow(n_gates, rent.p());
}

double total_interconnects(double n_gates, const RentParameters& rent) {
    require_gates(n_gates);
    return rent.alpha() * rent.k() * n_gates * (1.0 - std::pow(n_gates, rent.p() - 1.0));
}

TerminalSplit split_terminals(double n_gates, const RentParameters& rent, PartitionScheme part) {
    require_partition(n_gates, part);
    const double n = part.n_layers;
    const double metal_fraction = metal_terminal_fraction(part.n_layers, rent.p());

    TerminalSplit split;
    split.t_total = n * rent.k() * std::pow(n_gates / n, rent.p());
    split.t_metal = terminals(n_gates, rent);
    // n * k * (N/n)^p - k * N^p == n (1 - n^(p-1)) k (N/n)^p; the factored
    // form is exactly zero for n = 1 and never negative.
    split.t_fabric = n * (1.0 - metal_fraction) * rent.k() * std::pow(n_gates / n, rent.p());
    split.k_metal = rent.k() * metal_fraction;
    split.k_fabric = rent.k() * (1.0 - metal_fraction);
    return split;
}

double fabric_interconnect_count(double n_gates, const RentParameters& rent, PartitionScheme part) {
    const auto split = split_terminals(n_gates, rent, part);
    if (split.k_fabric == 0.0) return 0.0;
    return total_interconnects(n_gates, rent.with_k(split.k_fabric));
}

}  // namespace nwcost
