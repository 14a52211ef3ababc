#pragma once

#include "sfwm/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace sfwm
{
struct QuadratureOptions
{
    double relative_tolerance = 1e-10;
    double absolute_tolerance = 0.0;
    int max_panels = 10'000;
};

template <class T>
struct QuadratureResult
{
    T value{};
    double error = 0.0;
    int panels = 0;
};

namespace detail
{
// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15 constants).
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class T>
struct Panel
{
    double a;
    double b;
    T value;
    double error;
};

template <class T>
struct PanelOrder
{
    bool operator()(const Panel<T> &lhs, const Panel<T> &rhs) const { return lhs.error < rhs.error; }
};

template <class T, class F>
Panel<T> kronrod_panel(F &f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T f_centre = f(centre);
    T kronrod = kKronrodWeights[7] * f_centre;
    T gauss = kGaussWeights[3] * f_centre;
    for (std::size_t k = 0; k < 7; ++k)
    {
        const double dx = half * kKronrodNodes[k];
        const T pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[k] * pair;
        if (k % 2 == 1)
        {
            gauss += kGaussWeights[k / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}
} // namespace detail

// Globally adaptive G7K15 over [points.front(), points.back()], starting from
// one panel per interval between consecutive breakpoints. Subdivides the panel
// with the largest error estimate until the summed estimate meets the
// tolerance. Throws ComputationError when the panel budget is exhausted.
template <class F>
auto integrate(F &&f, std::span<const double> points, const QuadratureOptions &options = {})
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F &, double>>>
{
    using T = std::decay_t<std::invoke_result_t<F &, double>>;
    std::vector<double> nodes(points.begin(), points.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.size() < 2)
    {
        return {T{}, 0.0, 0};
    }
    for (double x : nodes)
    {
        if (!std::isfinite(x))
        {
            throw ValidationError("integrate: breakpoints must be finite");
        }
    }

    std::priority_queue<detail::Panel<T>, std::vector<detail::Panel<T>>, detail::PanelOrder<T>> active;
    std::vector<detail::Panel<T>> frozen;
    T total{};
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    {
        auto panel = detail::kronrod_panel<T>(f, nodes[i], nodes[i + 1]);
        total += panel.value;
        total_error += panel.error;
        active.push(panel);
    }
    const int budget = std::max<int>(options.max_panels, static_cast<int>(nodes.size()) - 1);
    int panels = static_cast<int>(nodes.size()) - 1;

    auto tolerance = [&] { return std::max(options.absolute_tolerance, options.relative_tolerance * std::abs(total)); };

    while (!std::isfinite(total_error) || total_error > tolerance())
    {
        if (!std::isfinite(total_error))
        {
            throw ComputationError("integrate: integrand produced a non-finite value");
        }
        if (active.empty() || panels >= budget)
        {
            throw ComputationError("integrate: no convergence after " + std::to_string(panels) +
                                   " panels (error estimate " + std::to_string(total_error) + ", tolerance " +
                                   std::to_string(tolerance()) + ")");
        }
        auto worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) <= 64.0 * std::numeric_limits<double>::epsilon() *
                                       std::max(std::abs(worst.a), std::abs(worst.b)))
        {
            frozen.push_back(worst);
            continue;
        }
        auto left = detail::kronrod_panel<T>(f, worst.a, mid);
        auto right = detail::kronrod_panel<T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++panels;
    }

    // Re-sum to shed the drift of the incremental updates.
    T sum{};
    double err = 0.0;
    while (!active.empty())
    {
        sum += active.top().value;
        err += active.top().error;
        active.pop();
    }
    for (const auto &p : frozen)
    {
        sum += p.value;
        err += p.error;
    }
    return {sum, err, panels};
}

template <class F>
auto integrate(F &&f, double a, double b, const QuadratureOptions &options = {})
{
    const std::array<double, 2> ends{a, b};
    return integrate(std::forward<F>(f), std::span<const double>(ends), options);
}

// Integral over the whole real line using Omega = scale * s / (1 - s^2),
// s in (-1, 1). `features` are abscissae (in Omega) where the integrand has
// peaks or kinks; they become breakpoints in s.
template <class F>
auto integrate_real_line(F &&f, double scale, std::span<const double> features = {},
                         const QuadratureOptions &options = {})
{
    using T = std::decay_t<std::invoke_result_t<F &, double>>;
    if (!(scale > 0.0) || !std::isfinite(scale))
    {
        throw ValidationError("integrate_real_line: scale must be positive and finite");
    }
    auto to_s = [scale](double omega) { return 2.0 * omega / (scale + std::hypot(scale, 2.0 * omega)); };
    std::vector<double> points{-1.0, 1.0};
    for (double x : features)
    {
        if (std::isfinite(x))
        {
            points.push_back(to_s(x));
        }
    }
    auto mapped = [&f, scale](double s) -> T {
        const double q = 1.0 - s * s;
        if (!(q > 0.0))
        {
            return T{};
        }
        const double omega = scale * s / q;
        const double jacobian = scale * (1.0 + s * s) / (q * q);
        if (!std::isfinite(omega) || !std::isfinite(jacobian))
        {
            return T{};
        }
        return f(omega) * jacobian;
    };
    return integrate(mapped, std::span<const double>(points), options);
}
} // namespace sfwm
