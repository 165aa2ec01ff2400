#pragma once

#include <cstdint>
#include <map>

#include "nwcost/rent.hpp"

namespace nwcost {

/// Normalizing factor of the two-region wirelength density, obtained by
/// integrating the unnormalized density over [1, 2 sqrt(N)] and dividing it
/// into N (1 - N^(p-1)).
///
/// Requires n_gates >= 4 and 0 < p < 1 with p != 0.5 (DomainError /
/// DegenerateExponentError otherwise).
double normalization_tau(double n_gates, double p);

/// Closed-form (Gamma function) expression for the same factor. Used as a cross-check.
double normalization_tau_closed_form(double n_gates, double p);

/// Stochastic wirelength distribution of N_G blocks on a square array.
/// Lengths are in gate pitches over the closed interval [1, 2 sqrt(N_G)].
///
///   l <= sqrt(N):  i(l) = (alpha k / 2) tau (l^3/3 - 2 sqrt(N) l^2 + 2 N l) l^(2p-4)
///   l >= sqrt(N):  i(l) = (alpha k / 6) tau (2 sqrt(N) - l)^3 l^(2p-4)
///
/// Designs with fewer than four gates yield an empty distribution whose
/// density is zero everywhere.
class WirelengthDistribution {
public:
    /// `k_effective` is the per-block terminal count that reaches the metal
    /// stack (k for planar designs, k n^(p-1) for stacked fabrics).
    static WirelengthDistribution make(double n_gates, double k_effective, double p, double alpha);

    /// Convenience overload taking alpha and p from `rent`.
    static WirelengthDistribution make(double n_gates, double k_effective, const RentParameters& rent) {
        return make(n_gates, k_effective, rent.p(), rent.alpha());
    }

    double n_gates() const noexcept { return n_gates_; }
    double k_effective() const noexcept { return k_eff_; }
    double p() const noexcept { return p_; }
    double alpha() const noexcept { return alpha_; }
    double tau() const noexcept { return tau_; }
    bool empty() const noexcept { return empty_; }

    double region_boundary() const noexcept { return sqrt_n_; }
    double min_length() const noexcept { return 1.0; }
    double max_length() const noexcept { return 2.0 * sqrt_n_; }

    /// Expected interconnect count over the whole domain: alpha k N (1 - N^(p-1)).
    double expected_total() const noexcept { return expected_total_; }

    /// i(l). RangeError outside [1, 2 sqrt(N)].
    double density(double l) const;

    /// I(l) = integral of i over [1, l].
    double cumulative_count(double l) const;

    /// L(l) = integral of zeta i(zeta) over [1, l], in gate pitches.
    double cumulative_length(double l) const;

    /// Integrals over an arbitrary sub-interval [a, b] of the domain.
    double count_between(double a, double b) const;
    double length_between(double a, double b) const;

    double region_one(double l) const;
    double region_two(double l) const;

private:
    WirelengthDistribution() = default;
    void require_in_domain(double l) const;
    double unnormalized(double l) const;

    double n_gates_ = 0.0;
    double k_eff_ = 0.0;
    double p_ = 0.0;
    double alpha_ = 0.0;
    double tau_ = 0.0;
    double sqrt_n_ = 0.5;
    double expected_total_ = 0.0;
    bool empty_ = true;
};

/// Unordered pair counts of a side x side array, keyed by Manhattan distance.
struct GridPairHistogram {
    int side = 0;
    std::map<int, std::uint64_t> counts;

    std::uint64_t total_pairs() const;
};

/// Exhaustive pair enumeration. DomainError for side < 1.
GridPairHistogram grid_pair_histogram(int side);

/// Continuous site-pair function of the array model: l^3/3 - 2 s l^2 + 2 s^2 l
/// below the region boundary s, (2 s - l)^3 / 3 above it.
double site_pair_polynomial(double l, double side);

}  // namespace nwcost
