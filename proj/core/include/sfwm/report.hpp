#pragma once

#include "sfwm/model.hpp"
#include "sfwm/optimizer.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfwm
{
std::string_view library_version();

struct ReportInputs
{
    RingParams ring;
    double gamma_c = 0.0;               // rad/s
    std::optional<double> power;        // W, enables absolute CW rates
    std::optional<double> energy;       // J, enables absolute pulsed probabilities
    double bandwidth_factor = 10.0;     // B in DeltaOmega = B tgamma
};

struct OptimumReportEntry
{
    OptimumRecord record;
    std::vector<double> couplings_si;   // rad/s
    std::optional<double> peak_absolute; // 1/s (CW) or per pulse (pulsed)
};

struct OptimaReport
{
    std::vector<OptimumReportEntry> entries;
    double gamma_c = 0.0;
    std::optional<double> r0;
    std::optional<double> p0;
    std::vector<std::string> warnings;
};

// All twelve tabulated optima in gamma_c / R0 / p0 units and in SI units.
OptimaReport report_optima(const ReportInputs &inputs);

std::string format_optima_report(const OptimaReport &report);
nlohmann::json optima_report_json(const OptimaReport &report);
} // namespace sfwm
