#include "sfwm/report.hpp"

#include <cstdio>

#ifndef SFWM_VERSION
#define SFWM_VERSION "unknown"
#endif

namespace sfwm
{
std::string_view library_version()
{
    return SFWM_VERSION;
}

OptimaReport report_optima(const ReportInputs &inputs)
{
    if (!(inputs.gamma_c > 0.0))
    {
        throw ValidationError("report_optima: gamma_c must be positive");
    }
    OptimaReport report;
    report.gamma_c = inputs.gamma_c;
    if (inputs.power)
    {
        report.r0 = rate_scale_R0(inputs.ring, *inputs.power, inputs.gamma_c);
    }
    if (inputs.energy)
    {
        Warnings w;
        report.p0 = prob_scale_p0(inputs.ring, *inputs.energy, inputs.bandwidth_factor, inputs.gamma_c, &w);
        report.warnings = w.messages();
    }
    for (const auto &rec : analytic_optima())
    {
        OptimumReportEntry e;
        e.record = rec;
        for (double x : rec.couplings)
        {
            e.couplings_si.push_back(x * inputs.gamma_c);
        }
        const auto &scale = rec.target.regime == PumpRegime::Cw ? report.r0 : report.p0;
        if (scale)
        {
            e.peak_absolute = rec.peak_value * *scale;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string format_optima_report(const OptimaReport &report)
{
    std::string out;
    char line[400];
    std::snprintf(line, sizeof line, "gamma_c = %.6g rad/s (gamma_c/2pi = %.6g Hz)\n", report.gamma_c,
                  report.gamma_c / kTwoPi);
    out += line;
    if (report.r0)
    {
        std::snprintf(line, sizeof line, "R0 = %.6g 1/s\n", *report.r0);
        out += line;
    }
    if (report.p0)
    {
        std::snprintf(line, sizeof line, "p0 = %.6g per pulse\n", *report.p0);
        out += line;
    }
    for (const auto &w : report.warnings)
    {
        out += "warning: " + w + "\n";
    }
    out += "geometry            regime  objective   couplings/gamma_c              peak (R0|p0)   couplings/2pi [Hz]     "
           "peak (SI)\n";
    for (const auto &e : report.entries)
    {
        const auto names = coupling_names(e.record.geometry);
        std::string norm;
        std::string si;
        for (std::size_t d = 0; d < names.size(); ++d)
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s%s=%.4g", d ? " " : "", names[d].c_str(), e.record.couplings[d]);
            norm += buf;
            std::snprintf(buf, sizeof buf, "%s%.4g", d ? " " : "", e.couplings_si[d] / kTwoPi);
            si += buf;
        }
        char peak_si[64] = "-";
        if (e.peak_absolute)
        {
            std::snprintf(peak_si, sizeof peak_si, "%.4g %s", *e.peak_absolute,
                          e.record.target.regime == PumpRegime::Cw ? "1/s" : "/pulse");
        }
        std::snprintf(line, sizeof line, "%-19s %-7s %-11s %-30s %-14.6g %-22s %s%s\n",
                      std::string(to_string(e.record.geometry)).c_str(),
                      std::string(to_string(e.record.target.regime)).c_str(),
                      std::string(to_string(e.record.target.objective)).c_str(), norm.c_str(), e.record.peak_value,
                      si.c_str(), peak_si, e.record.exact ? "" : "  (numeric)");
        out += line;
    }
    return out;
}

nlohmann::json optima_report_json(const OptimaReport &report)
{
    nlohmann::json j;
    j["version"] = library_version();
    j["gamma_c"] = report.gamma_c;
    j["R0"] = report.r0 ? nlohmann::json(*report.r0) : nlohmann::json(nullptr);
    j["p0"] = report.p0 ? nlohmann::json(*report.p0) : nlohmann::json(nullptr);
    j["warnings"] = report.warnings;
    j["optima"] = nlohmann::json::array();
    for (const auto &e : report.entries)
    {
        nlohmann::json c = nlohmann::json::object();
        nlohmann::json c_si = nlohmann::json::object();
        const auto names = coupling_names(e.record.geometry);
        for (std::size_t d = 0; d < names.size(); ++d)
        {
            c[names[d]] = e.record.couplings[d];
            c_si[names[d]] = e.couplings_si[d];
        }
        nlohmann::json o;
        o["geometry"] = to_string(e.record.geometry);
        o["regime"] = to_string(e.record.target.regime);
        o["objective"] = to_string(e.record.target.objective);
        o["couplings"] = c;
        o["couplings_rad_per_s"] = c_si;
        o["peak_value"] = e.record.peak_value;
        o["peak_absolute"] = e.peak_absolute ? nlohmann::json(*e.peak_absolute) : nlohmann::json(nullptr);
        o["exact"] = e.record.exact;
        j["optima"].push_back(std::move(o));
    }
    return j;
}
} // namespace sfwm
