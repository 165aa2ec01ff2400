#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <queue>
#include <span>
#include <vector>

namespace nwcost::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

namespace detail {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// 7-point Gauss / 15-point Kronrod pair on [a, b].
template <class Func>
Panel gauss_kronrod_15(const Func& f, double a, double b) {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
    };
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    };
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    };

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * wgk[7];
    double gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += wgk[j] * sum;
        if (j % 2 == 1) gauss += wg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]; b < a
/// gives the negated integral over [b, a].
///
/// Every breakpoint strictly inside (a, b) is forced to be a panel endpoint,
/// which keeps kinks and region boundaries off panel interiors. The panel
/// with the largest error estimate is bisected until the summed estimate is
/// below max(abs_tol, rel_tol * |value|) or `max_panels` is reached.
template <class Func>
Result integrate(const Func& f, double a, double b, std::span<const double> breakpoints,
                 double rel_tol = 1e-10, double abs_tol = 0.0, int max_panels = 2000) {
    if (b < a) {
        auto flipped = integrate(f, b, a, breakpoints, rel_tol, abs_tol, max_panels);
        flipped.value = -flipped.value;
        return flipped;
    }
    Result result;
    if (!(b > a)) return result;

    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<detail::Panel> heap;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto panel = detail::gauss_kronrod_15(f, edges[i], edges[i + 1]);
        result.evaluations += 15;
        value += panel.value;
        error += panel.error;
        heap.push(panel);
    }

    while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
           static_cast<int>(heap.size()) < max_panels) {
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        // Panels that cannot be split further in floating point stay as they are.
        if (!(mid > worst.a && mid < worst.b)) break;
        heap.pop();
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        result.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the cancellation accumulated by incremental updates.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    result.value = value;
    result.error = error;
    return result;
}

template <class Func>
Result integrate(const Func& f, double a, double b, std::initializer_list<double> breakpoints = {},
                 double rel_tol = 1e-10, double abs_tol = 0.0, int max_panels = 2000) {
    return integrate(f, a, b, std::span<const double>(breakpoints.begin(), breakpoints.size()), rel_tol,
                     abs_tol, max_panels);
}

}  // namespace nwcost::quad
