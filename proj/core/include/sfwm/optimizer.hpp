#pragma once

#include "sfwm/model.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfwm
{
enum class Objective
{
    OnePhoton, // R_s or p_s
    TwoPhoton, // R_si or p_si
};

enum class PumpRegime
{
    Cw,
    BroadbandPulse, // fixed pulse energy, DeltaOmega = B tgamma
};

struct OptimizationTarget
{
    Objective objective = Objective::OnePhoton;
    PumpRegime regime = PumpRegime::Cw;

    friend bool operator==(const OptimizationTarget &, const OptimizationTarget &) = default;
};

std::string_view to_string(Objective objective);
std::string_view to_string(PumpRegime regime);
Objective parse_objective(std::string_view text);
PumpRegime parse_pump_regime(std::string_view text);

enum class OptimumSource
{
    Analytic,
    Numeric,
};

struct OptimumRecord
{
    Geometry geometry = Geometry::AllPassIdentical;
    OptimizationTarget target;
    // Free couplings in units of gamma_c, ordered as coupling_names(geometry).
    std::vector<double> couplings;
    // Peak rate in units of R0 (CW) or probability in units of p0 (pulsed).
    double peak_value = 0.0;
    OptimumSource source = OptimumSource::Analytic;
    // Analytic records: true for exact rationals, false for stored numeric constants.
    bool exact = true;
};

// Free coupling axes per geometry: {gamma_a}, {gamma_a, gamma_b} or {tgamma_a, gamma_b}.
std::vector<std::string> coupling_names(Geometry geometry);
int coupling_dimension(Geometry geometry);

// Configuration with the free couplings set to couplings * gamma_c.
CouplingConfig make_config(Geometry geometry, std::span<const double> couplings, double gamma_c);

// Rate / R0 or probability / p0 at the given normalized couplings.
double normalized_objective(Geometry geometry, OptimizationTarget target, std::span<const double> couplings,
                            double gamma_c = 1.0);

// The twelve tabulated optima (six CW, six broadband pulse).
std::span<const OptimumRecord> analytic_optima();
OptimumRecord analytic_optimum(Geometry geometry, OptimizationTarget target);

struct OptimizerOptions
{
    double lower = 0.05; // search box per axis, gamma_c units
    double upper = 10.0;
    int scan_points = 41;   // log-spaced coarse scan per axis
    double x_tolerance = 1e-10;
    double f_tolerance = 1e-15;
    int max_iterations = 20'000;
    double gamma_c = 1.0; // absolute gamma_c used to build configurations
};

struct MaximizeResult
{
    std::vector<double> argmax;
    double value = 0.0;
    int evaluations = 0;
};

using ObjectiveFunction = std::function<double(std::span<const double>)>;

// Coarse log-grid scan over the box followed by bounded Nelder-Mead
// refinement. On plateaus the smallest coupling wins. Throws
// ComputationError for non-finite objective values or when the iteration
// budget runs out.
MaximizeResult maximize(const ObjectiveFunction &objective, int dimension, const OptimizerOptions &options);

// Box must contain [0.05, 10] on every axis.
OptimumRecord numeric_optimum(Geometry geometry, OptimizationTarget target, const OptimizerOptions &options = {});

struct ValidationEntry
{
    OptimumRecord reference;
    OptimumRecord numeric;
    double coupling_error = 0.0;     // max |difference| over axes, gamma_c units
    double value_error = 0.0;        // relative for exact entries, absolute otherwise
    double coupling_tolerance = 0.0;
    double value_tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport
{
    std::vector<ValidationEntry> entries;

    int failures() const;
};

inline constexpr double kExactCouplingTolerance = 1e-3;
inline constexpr double kExactValueTolerance = 1e-6;      // relative
inline constexpr double kStoredCouplingTolerance = 1e-2;
inline constexpr double kStoredValueTolerance = 2e-4;     // absolute, units of p0

// Re-derives every reference optimum numerically and diffs the two.
ValidationReport cross_validate_optima(std::span<const OptimumRecord> reference = analytic_optima(),
                                       const OptimizerOptions &options = {});

std::string format_validation_report(const ValidationReport &report);
} // namespace sfwm
