#include "sfwm/optimizer.hpp"

#include "sfwm/cw.hpp"
#include "sfwm/pulsed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace sfwm
{
std::string_view to_string(Objective objective)
{
    return objective == Objective::OnePhoton ? "one_photon" : "two_photon";
}

std::string_view to_string(PumpRegime regime)
{
    return regime == PumpRegime::Cw ? "cw" : "pulsed";
}

Objective parse_objective(std::string_view text)
{
    if (text == "one_photon" || text == "singles" || text == "Rs" || text == "ps")
    {
        return Objective::OnePhoton;
    }
    if (text == "two_photon" || text == "pairs" || text == "Rsi" || text == "psi")
    {
        return Objective::TwoPhoton;
    }
    throw ValidationError("unknown objective '" + std::string(text) + "' (expected one_photon or two_photon)");
}

PumpRegime parse_pump_regime(std::string_view text)
{
    if (text == "cw")
    {
        return PumpRegime::Cw;
    }
    if (text == "pulsed" || text == "broadband_pulse")
    {
        return PumpRegime::BroadbandPulse;
    }
    throw ValidationError("unknown pump regime '" + std::string(text) + "' (expected cw or pulsed)");
}

std::vector<std::string> coupling_names(Geometry geometry)
{
    switch (geometry)
    {
    case Geometry::AllPassIdentical:
        return {"gamma_a"};
    case Geometry::AddDropIdentical:
        return {"gamma_a", "gamma_b"};
    case Geometry::AddDropDistinct:
        return {"tgamma_a", "gamma_b"};
    }
    return {};
}

int coupling_dimension(Geometry geometry)
{
    return geometry == Geometry::AllPassIdentical ? 1 : 2;
}

CouplingConfig make_config(Geometry geometry, std::span<const double> couplings, double gamma_c)
{
    if (couplings.size() != static_cast<std::size_t>(coupling_dimension(geometry)))
    {
        throw ValidationError("geometry " + std::string(to_string(geometry)) + " takes " +
                              std::to_string(coupling_dimension(geometry)) + " coupling value(s)");
    }
    switch (geometry)
    {
    case Geometry::AllPassIdentical:
        return CouplingConfig::all_pass(couplings[0] * gamma_c, gamma_c);
    case Geometry::AddDropIdentical:
        return CouplingConfig::add_drop_identical(couplings[0] * gamma_c, couplings[1] * gamma_c, gamma_c);
    case Geometry::AddDropDistinct:
        return CouplingConfig::add_drop_distinct(couplings[0] * gamma_c, couplings[1] * gamma_c, gamma_c);
    }
    throw ValidationError("unknown geometry");
}

double normalized_objective(Geometry geometry, OptimizationTarget target, std::span<const double> couplings,
                            double gamma_c)
{
    const CouplingConfig config = make_config(geometry, couplings, gamma_c);
    if (target.regime == PumpRegime::Cw)
    {
        return target.objective == Objective::OnePhoton ? cw_single_rate_normalized(config)
                                                        : cw_pair_rate_normalized(config);
    }
    return target.objective == Objective::OnePhoton ? pulsed_single_prob_normalized(config)
                                                    : pulsed_pair_prob_normalized(config);
}

namespace
{
constexpr OptimizationTarget kCwOne{Objective::OnePhoton, PumpRegime::Cw};
constexpr OptimizationTarget kCwTwo{Objective::TwoPhoton, PumpRegime::Cw};
constexpr OptimizationTarget kPulsedOne{Objective::OnePhoton, PumpRegime::BroadbandPulse};
constexpr OptimizationTarget kPulsedTwo{Objective::TwoPhoton, PumpRegime::BroadbandPulse};

OptimumRecord rec(Geometry g, OptimizationTarget t, std::vector<double> x, double value, bool exact = true)
{
    return {g, t, std::move(x), value, OptimumSource::Analytic, exact};
}

const std::vector<OptimumRecord> &table()
{
    using G = Geometry;
    static const std::vector<OptimumRecord> records = {
        rec(G::AllPassIdentical, kCwOne, {1.0}, 1.0 / 2.0),
        rec(G::AllPassIdentical, kCwTwo, {4.0 / 3.0}, 221184.0 / 823543.0),
        rec(G::AddDropIdentical, kCwOne, {2.0 / 3.0, 1.0 / 3.0}, 2.0 / 27.0),
        rec(G::AddDropIdentical, kCwTwo, {2.0 / 3.0, 2.0 / 3.0}, 13824.0 / 823543.0),
        rec(G::AddDropDistinct, kCwOne, {1.0, 1.0}, 1.0 / 2.0),
        rec(G::AddDropDistinct, kCwTwo, {1.0, 2.0}, 8.0 / 27.0),
        rec(G::AllPassIdentical, kPulsedOne, {3.0 / 2.0}, 54.0 / 3125.0),
        rec(G::AllPassIdentical, kPulsedTwo, {2.0}, 8.0 / 729.0),
        rec(G::AddDropIdentical, kPulsedOne, {1.0, 1.0 / 2.0}, 8.0 / 3125.0),
        rec(G::AddDropIdentical, kPulsedTwo, {1.0, 1.0}, 1.0 / 1458.0),
        // No closed form; stored to the published precision.
        rec(G::AddDropDistinct, kPulsedOne, {1.37, 1.83}, 0.0173, false),
        rec(G::AddDropDistinct, kPulsedTwo, {1.46, 3.17}, 0.0125, false),
    };
    return records;
}

struct Vertex
{
    std::vector<double> x;
    double f = 0.0;
};

// Higher value first; on ties the lexicographically smaller point.
bool better(const Vertex &a, const Vertex &b)
{
    if (a.f != b.f)
    {
        return a.f > b.f;
    }
    return a.x < b.x;
}

class Evaluator
{
public:
    Evaluator(const ObjectiveFunction &f, double lo, double hi) : f_(f), lo_(lo), hi_(hi) {}

    Vertex operator()(std::vector<double> x)
    {
        for (double &v : x)
        {
            v = std::clamp(v, lo_, hi_);
        }
        const double value = f_(x);
        ++count;
        if (!std::isfinite(value))
        {
            throw ComputationError("optimizer: objective returned a non-finite value");
        }
        return {std::move(x), value};
    }

    int count = 0;

private:
    const ObjectiveFunction &f_;
    double lo_;
    double hi_;
};

double spread(const std::vector<Vertex> &simplex)
{
    double worst = 0.0;
    const auto &best = simplex.front().x;
    for (std::size_t k = 1; k < simplex.size(); ++k)
    {
        for (std::size_t d = 0; d < best.size(); ++d)
        {
            worst = std::max(worst, std::abs(simplex[k].x[d] - best[d]) / std::max(1.0, std::abs(best[d])));
        }
    }
    return worst;
}

// Bounded Nelder-Mead (points are clamped into the box). Returns true on convergence.
bool nelder_mead(Evaluator &eval, std::vector<Vertex> &simplex, const OptimizerOptions &opt, int &iterations)
{
    const std::size_t n = simplex.front().x.size();
    auto combine = [n](const std::vector<double> &a, const std::vector<double> &b, double t) {
        std::vector<double> out(n);
        for (std::size_t d = 0; d < n; ++d)
        {
            out[d] = a[d] + t * (b[d] - a[d]);
        }
        return out;
    };

    while (iterations < opt.max_iterations)
    {
        std::sort(simplex.begin(), simplex.end(), better);
        const double f_best = simplex.front().f;
        const double f_worst = simplex.back().f;
        if (spread(simplex) <= opt.x_tolerance &&
            f_best - f_worst <= opt.f_tolerance * std::max(std::abs(f_best), 1e-300))
        {
            return true;
        }
        ++iterations;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k + 1 < simplex.size(); ++k)
        {
            for (std::size_t d = 0; d < n; ++d)
            {
                centroid[d] += simplex[k].x[d] / static_cast<double>(n);
            }
        }
        Vertex &worst = simplex.back();
        const Vertex &second = simplex[simplex.size() - 2];

        Vertex reflected = eval(combine(centroid, worst.x, -1.0));
        if (better(reflected, simplex.front()))
        {
            Vertex expanded = eval(combine(centroid, worst.x, -2.0));
            worst = better(expanded, reflected) ? std::move(expanded) : std::move(reflected);
            continue;
        }
        if (better(reflected, second))
        {
            worst = std::move(reflected);
            continue;
        }
        const bool outside = better(reflected, worst);
        Vertex contracted = outside ? eval(combine(centroid, reflected.x, 0.5)) : eval(combine(centroid, worst.x, 0.5));
        if (better(contracted, outside ? reflected : worst))
        {
            worst = std::move(contracted);
            continue;
        }
        for (std::size_t k = 1; k < simplex.size(); ++k)
        {
            simplex[k] = eval(combine(simplex.front().x, simplex[k].x, 0.5));
        }
    }
    return false;
}

std::vector<Vertex> initial_simplex(Evaluator &eval, const std::vector<double> &x0, double relative_step, double lo,
                                    double hi)
{
    std::vector<Vertex> simplex;
    simplex.push_back(eval(x0));
    for (std::size_t d = 0; d < x0.size(); ++d)
    {
        std::vector<double> x = x0;
        const double step = relative_step * x0[d];
        x[d] = x0[d] + step <= hi ? x0[d] + step : x0[d] - step;
        x[d] = std::clamp(x[d], lo, hi);
        simplex.push_back(eval(std::move(x)));
    }
    return simplex;
}
} // namespace

std::span<const OptimumRecord> analytic_optima()
{
    return table();
}

OptimumRecord analytic_optimum(Geometry geometry, OptimizationTarget target)
{
    for (const auto &record : table())
    {
        if (record.geometry == geometry && record.target == target)
        {
            return record;
        }
    }
    throw ValidationError("no tabulated optimum for this geometry and target");
}

MaximizeResult maximize(const ObjectiveFunction &objective, int dimension, const OptimizerOptions &options)
{
    if (dimension < 1 || dimension > 2)
    {
        throw ValidationError("maximize: dimension must be 1 or 2");
    }
    if (!(options.lower > 0.0) || !(options.upper > options.lower) || !std::isfinite(options.upper))
    {
        throw ValidationError("maximize: bounds must satisfy 0 < lower < upper");
    }
    if (options.scan_points < 3)
    {
        throw ValidationError("maximize: at least 3 scan points per axis required");
    }

    Evaluator eval(objective, options.lower, options.upper);
    const int m = options.scan_points;
    const double ratio = std::pow(options.upper / options.lower, 1.0 / (m - 1));
    std::vector<double> axis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
    {
        axis[static_cast<std::size_t>(i)] = options.lower * std::pow(ratio, i);
    }
    axis.back() = options.upper;

    Vertex best;
    bool have = false;
    const int total = dimension == 1 ? m : m * m;
    for (int k = 0; k < total; ++k)
    {
        std::vector<double> x;
        if (dimension == 1)
        {
            x = {axis[static_cast<std::size_t>(k)]};
        }
        else
        {
            x = {axis[static_cast<std::size_t>(k / m)], axis[static_cast<std::size_t>(k % m)]};
        }
        Vertex v = eval(std::move(x));
        if (!have || better(v, best))
        {
            best = std::move(v);
            have = true;
        }
    }

    int iterations = 0;
    std::vector<Vertex> simplex = initial_simplex(eval, best.x, ratio - 1.0, options.lower, options.upper);
    if (!nelder_mead(eval, simplex, options, iterations))
    {
        throw ComputationError("optimizer: Nelder-Mead did not converge within the iteration budget");
    }
    // One restart around the converged point guards against a collapsed simplex.
    std::vector<Vertex> restart = initial_simplex(eval, simplex.front().x, 1e-3, options.lower, options.upper);
    if (!nelder_mead(eval, restart, options, iterations))
    {
        throw ComputationError("optimizer: Nelder-Mead did not converge within the iteration budget");
    }
    const Vertex &winner = better(restart.front(), simplex.front()) ? restart.front() : simplex.front();
    return {winner.x, winner.f, eval.count};
}

OptimumRecord numeric_optimum(Geometry geometry, OptimizationTarget target, const OptimizerOptions &options)
{
    if (options.lower > 0.05 || options.upper < 10.0)
    {
        throw ValidationError("numeric_optimum: search box must contain [0.05, 10] gamma_c on every axis");
    }
    if (!(options.gamma_c > 0.0) || !std::isfinite(options.gamma_c))
    {
        throw ValidationError("numeric_optimum: gamma_c must be positive and finite");
    }
    const auto result = maximize(
        [&](std::span<const double> x) { return normalized_objective(geometry, target, x, options.gamma_c); },
        coupling_dimension(geometry), options);
    return {geometry, target, result.argmax, result.value, OptimumSource::Numeric, false};
}

int ValidationReport::failures() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto &e) { return !e.passed; }));
}

ValidationReport cross_validate_optima(std::span<const OptimumRecord> reference, const OptimizerOptions &options)
{
    ValidationReport report;
    for (const auto &ref : reference)
    {
        ValidationEntry entry;
        entry.reference = ref;
        entry.numeric = numeric_optimum(ref.geometry, ref.target, options);
        if (entry.numeric.couplings.size() != ref.couplings.size())
        {
            throw ValidationError("cross_validate_optima: reference has the wrong number of couplings");
        }
        for (std::size_t d = 0; d < ref.couplings.size(); ++d)
        {
            entry.coupling_error =
                std::max(entry.coupling_error, std::abs(entry.numeric.couplings[d] - ref.couplings[d]));
        }
        const double diff = std::abs(entry.numeric.peak_value - ref.peak_value);
        if (ref.exact)
        {
            entry.coupling_tolerance = kExactCouplingTolerance;
            entry.value_tolerance = kExactValueTolerance;
            entry.value_error = diff / std::abs(ref.peak_value);
        }
        else
        {
            entry.coupling_tolerance = kStoredCouplingTolerance;
            entry.value_tolerance = kStoredValueTolerance;
            entry.value_error = diff;
        }
        entry.passed = entry.coupling_error <= entry.coupling_tolerance && entry.value_error <= entry.value_tolerance;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string format_validation_report(const ValidationReport &report)
{
    std::string out;
    char line[320];
    for (const auto &e : report.entries)
    {
        std::string ref_x;
        std::string num_x;
        for (std::size_t d = 0; d < e.reference.couplings.size(); ++d)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%s%.6g", d ? "," : "", e.reference.couplings[d]);
            ref_x += buf;
            std::snprintf(buf, sizeof buf, "%s%.6g", d ? "," : "", e.numeric.couplings[d]);
            num_x += buf;
        }
        std::snprintf(line, sizeof line,
                      "%-4s %-18s %-6s %-10s ref=(%s) %.6g  num=(%s) %.6g  dx=%.2e dv=%.2e%s\n",
                      e.passed ? "ok" : "FAIL", std::string(to_string(e.reference.geometry)).c_str(),
                      std::string(to_string(e.reference.target.regime)).c_str(),
                      std::string(to_string(e.reference.target.objective)).c_str(), ref_x.c_str(),
                      e.reference.peak_value, num_x.c_str(), e.numeric.peak_value, e.coupling_error, e.value_error,
                      e.reference.exact ? " (rel)" : " (abs)");
        out += line;
    }
    std::snprintf(line, sizeof line, "%d of %zu entries agree\n",
                  static_cast<int>(report.entries.size()) - report.failures(), report.entries.size());
    out += line;
    return out;
}
} // namespace sfwm
