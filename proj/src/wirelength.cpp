#include "nwcost/wirelength.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nwcost/errors.hpp"
#include "nwcost/quadrature.hpp"

namespace nwcost {

namespace {

constexpr double kQuadRelTol = 1e-11;

void require_tau_domain(double n_gates, double p) {
    if (!(std::isfinite(n_gates) && n_gates >= 4.0))
        throw DomainError("normalization requires n_gates >= 4, got " + std::to_string(n_gates));
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("Rent exponent must lie in (0, 1), got " + std::to_string(p));
    if (std::abs(p - 0.5) < 1e-12 || std::abs(p - 1.0) < 1e-12)
        throw DegenerateExponentError("Rent exponent " + std::to_string(p) +
                                      " is a pole of the wirelength normalization");
}

// Unnormalized density without the alpha k tau prefactor; region I carries
// the 1/2 and region II the 1/6.
double shape(double l, double n, double s, double p) {
    const double power = std::pow(l, 2.0 * p - 4.0);
    if (l <= s) return 0.5 * (l * l * l / 3.0 - 2.0 * s * l * l + 2.0 * n * l) * power;
    const double d = 2.0 * s - l;
    return d * d * d / 6.0 * power;
}

}  // namespace

double normalization_tau(double n_gates, double p) {
    require_tau_domain(n_gates, p);
    const double s = std::sqrt(n_gates);
    auto f = [&](double l) { return shape(l, n_gates, s, p); };
    const double integral = quad::integrate(f, 1.0, 2.0 * s, {s}, 1e-13).value;
    return n_gates * (1.0 - std::pow(n_gates, p - 1.0)) / integral;
}

double normalization_tau_closed_form(double n_gates, double p) {
    require_tau_domain(n_gates, p);
    const double s = std::sqrt(n_gates);
    const double numerator = 2.0 * n_gates * (1.0 - std::pow(n_gates, p - 1.0));
    const double denominator =
        -std::pow(n_gates, p) * (1.0 + 2.0 * p - std::pow(2.0, 2.0 * p - 1.0)) /
            (p * (2.0 * p - 1.0) * (p - 1.0) * (2.0 * p - 3.0)) -
        1.0 / (6.0 * p) + 2.0 * s / (2.0 * p - 1.0) - n_gates / (p - 1.0);
    return numerator / denominator;
}

WirelengthDistribution WirelengthDistribution::make(double n_gates, double k_effective, double p, double alpha) {
    if (!(std::isfinite(n_gates) && n_gates >= 1.0))
        throw DomainError("n_gates must be >= 1, got " + std::to_string(n_gates));
    if (!(std::isfinite(k_effective) && k_effective >= 0.0))
        throw DomainError("effective terminal count must be non-negative, got " + std::to_string(k_effective));
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("sink fraction must lie in (0, 1), got " + std::to_string(alpha));

    WirelengthDistribution d;
    d.n_gates_ = n_gates;
    d.k_eff_ = k_effective;
    d.p_ = p;
    d.alpha_ = alpha;
    d.sqrt_n_ = std::sqrt(n_gates);
    if (n_gates < 4.0) {
        if (!(p > 0.0 && p <= 1.0)) throw DomainError("Rent exponent must lie in (0, 1)");
        return d;
    }
    d.tau_ = normalization_tau(n_gates, p);
    d.expected_total_ = alpha * k_effective * n_gates * (1.0 - std::pow(n_gates, p - 1.0));
    d.empty_ = k_effective == 0.0;
    return d;
}

void WirelengthDistribution::require_in_domain(double l) const {
    if (!(l >= 1.0 && l <= max_length()))
        throw RangeError("length " + std::to_string(l) + " outside [1, " + std::to_string(max_length()) + "]");
}

double WirelengthDistribution::unnormalized(double l) const { return shape(l, n_gates_, sqrt_n_, p_); }

double WirelengthDistribution::region_one(double l) const {
    const double s = sqrt_n_;
    return 0.5 * alpha_ * k_eff_ * tau_ * (l * l * l / 3.0 - 2.0 * s * l * l + 2.0 * n_gates_ * l) *
           std::pow(l, 2.0 * p_ - 4.0);
}

double WirelengthDistribution::region_two(double l) const {
    const double d = 2.0 * sqrt_n_ - l;
    return alpha_ * k_eff_ / 6.0 * tau_ * d * d * d * std::pow(l, 2.0 * p_ - 4.0);
}

double WirelengthDistribution::density(double l) const {
    require_in_domain(l);
    if (empty_) return 0.0;
    return l <= sqrt_n_ ? region_one(l) : region_two(l);
}

double WirelengthDistribution::count_between(double a, double b) const {
    require_in_domain(a);
    require_in_domain(b);
    if (empty_ || !(b > a)) return 0.0;
    auto f = [this](double l) { return unnormalized(l); };
    return alpha_ * k_eff_ * tau_ * quad::integrate(f, a, b, {sqrt_n_}, kQuadRelTol).value;
}

double WirelengthDistribution::length_between(double a, double b) const {
    require_in_domain(a);
    require_in_domain(b);
    if (empty_ || !(b > a)) return 0.0;
    auto f = [this](double l) { return l * unnormalized(l); };
    return alpha_ * k_eff_ * tau_ * quad::integrate(f, a, b, {sqrt_n_}, kQuadRelTol).value;
}

double WirelengthDistribution::cumulative_count(double l) const {
    require_in_domain(l);
    return count_between(1.0, l);
}

double WirelengthDistribution::cumulative_length(double l) const {
    require_in_domain(l);
    return length_between(1.0, l);
}

std::uint64_t GridPairHistogram::total_pairs() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

GridPairHistogram grid_pair_histogram(int side) {
    if (side < 1) throw DomainError("grid side must be >= 1, got " + std::to_string(side));
    GridPairHistogram hist;
    hist.side = side;
    const int cells = side * side;
    for (int a = 0; a < cells; ++a) {
        const int ax = a % side;
        const int ay = a / side;
        for (int b = a + 1; b < cells; ++b) {
            const int distance = std::abs(b % side - ax) + std::abs(b / side - ay);
            ++hist.counts[distance];
        }
    }
    return hist;
}

double site_pair_polynomial(double l, double side) {
    if (l <= side) return l * l * l / 3.0 - 2.0 * side * l * l + 2.0 * side * side * l;
    const double d = 2.0 * side - l;
    return d * d * d / 3.0;
}

}  // namespace nwcost
