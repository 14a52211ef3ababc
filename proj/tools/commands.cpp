#include "commands.hpp"

#include <sfwm/config.hpp>
#include <sfwm/cw.hpp>
#include <sfwm/emit.hpp>
#include <sfwm/optimizer.hpp>
#include <sfwm/pulsed.hpp>
#include <sfwm/report.hpp>
#include <sfwm/schmidt.hpp>
#include <sfwm/sweep.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <utility>
#include <vector>

namespace sfwm::cli
{
namespace
{
using json = nlohmann::json;

AppConfig config_from(const Options &opt)
{
    return opt.config ? load_config(*opt.config) : AppConfig{};
}

void deliver(const Options &opt, const std::string &text)
{
    if (opt.out)
    {
        write_text_file(*opt.out, text);
    }
    else
    {
        std::cout << text << std::flush;
    }
}

void print_warnings(const Warnings &w)
{
    for (const auto &m : w.messages())
    {
        std::cerr << "warning: " << m << "\n";
    }
}

std::string number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Ordered quantity -> value list, rendered as two-column CSV or a flat JSON object.
class KeyValues
{
public:
    void add(std::string key, json value) { items_.emplace_back(std::move(key), std::move(value)); }

    std::string render(OutputFormat format) const
    {
        if (format == OutputFormat::Json)
        {
            json j = json::object();
            for (const auto &[k, v] : items_)
            {
                j[k] = v;
            }
            return j.dump(2) + "\n";
        }
        std::string out = "quantity,value\n";
        for (const auto &[k, v] : items_)
        {
            out += k + "," + (v.is_number() ? number(v.get<double>()) : v.is_string() ? v.get<std::string>() : v.dump()) +
                   "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, json>> items_;
};

OutputFormat format_or(const Options &opt, OutputFormat fallback)
{
    return opt.format ? parse_output_format(*opt.format) : fallback;
}

int run_figure(const Options &opt, const std::vector<SweepSpec> &specs, const std::string &default_prefix)
{
    const OutputFormat format = format_or(opt, OutputFormat::Csv);
    const std::string prefix = opt.out.value_or(default_prefix);
    const char *ext = format == OutputFormat::Csv ? "csv" : "json";
    const char letters[] = {'a', 'b', 'c'};
    for (std::size_t k = 0; k < specs.size(); ++k)
    {
        const SweepResult result = run_sweep(specs[k], opt.threads, opt.refine);
        const std::string path = prefix + "_" + letters[k] + "." + ext;
        emit(result, format, path);
        std::cout << path << " (" << to_string(specs[k].geometry) << ", " << result.rows.size() << " rows)\n";
        const json &maxima = result.meta.contains("refined_maxima") ? result.meta["refined_maxima"]
                                                                      : result.meta["grid_maxima"];
        for (const auto &[name, m] : maxima.items())
        {
            std::cout << "  max " << name << " = " << number(m["value"].get<double>()) << " at "
                      << m["couplings"].dump() << "\n";
        }
    }
    return 0;
}
} // namespace

int rates(const Options &opt)
{
    const AppConfig cfg = config_from(opt);
    const CouplingConfig config = cfg.coupling_config();
    const PumpSpec pump = cfg.pump_spec();
    Warnings warnings;

    KeyValues kv;
    kv.add("geometry", std::string(to_string(cfg.geometry)));
    kv.add("regime", std::string(to_string(cfg.regime())));
    const auto x = cfg.effective_couplings();
    const auto names = coupling_names(cfg.geometry);
    for (std::size_t d = 0; d < names.size(); ++d)
    {
        kv.add(names[d] + "_over_gamma_c", x[d]);
    }
    const auto lw = total_linewidths(config);
    const auto q = quality_factors(cfg.ring, config);
    kv.add("gamma_c", cfg.gamma_c);
    kv.add("gamma", lw.gamma);
    kv.add("pump_gamma", lw.pump_gamma);
    kv.add("Q_intrinsic", q.intrinsic);
    kv.add("Q_loaded", q.loaded);
    kv.add("fsr_hz", cfg.ring.free_spectral_range());
    kv.add("heralding_efficiency", config.heralding_efficiency());

    if (pump.is_cw())
    {
        const auto obs = cw_observables(cfg.ring, config, pump.power());
        const auto acc = cw_accidentals_and_car(cfg.ring, config, pump.power(), cfg.coincidence_window);
        kv.add("R0", rate_scale_R0(cfg.ring, pump.power(), cfg.gamma_c));
        kv.add("Rs", obs.signal_rate);
        kv.add("Ri", obs.idler_rate);
        kv.add("Rsi", obs.pair_rate);
        kv.add("pump_buildup", cw_pump_buildup(config, 0.0));
        kv.add("coincidence_window", cfg.coincidence_window);
        kv.add("accidental_rate", acc.rate);
        kv.add("CAR", acc.car ? json(*acc.car) : json(nullptr));
    }
    else
    {
        const auto obs = pulsed_observables(cfg.ring, config, pump, &warnings);
        kv.add("delta_omega", pump.delta_omega(config.pump_gamma()));
        if (pump.spectrum_kind() == SpectrumKind::FlattopAnalytic &&
            pump.bandwidth_mode() == BandwidthMode::BandwidthFactor)
        {
            kv.add("p0", prob_scale_p0(cfg.ring, pump.energy(), pump.bandwidth_value(), cfg.gamma_c, &warnings));
        }
        kv.add("method", obs.method == PulsedMethod::BroadbandClosedForm ? "closed_form" : "numeric");
        kv.add("ps", obs.signal_prob);
        kv.add("pi", obs.idler_prob);
        kv.add("psi", obs.pair_prob);
        kv.add("p_acc", accidental_probability(obs));
        if (cfg.repetition_rate)
        {
            kv.add("repetition_rate", *cfg.repetition_rate);
            kv.add("Rs", obs.signal_prob * *cfg.repetition_rate);
            kv.add("Rsi", obs.pair_prob * *cfg.repetition_rate);
        }
    }
    print_warnings(warnings);
    deliver(opt, kv.render(format_or(opt, OutputFormat::Csv)));
    return 0;
}

int sweep(const Options &opt)
{
    if (!opt.config)
    {
        throw ValidationError("sweep needs --config with a [sweep] section");
    }
    SweepSpec spec = config_from(opt).sweep_spec();
    if (opt.grid)
    {
        spec.axis1.points = *opt.grid;
        if (spec.axis2)
        {
            spec.axis2->points = *opt.grid;
        }
    }
    if (opt.schmidt_points)
    {
        spec.schmidt.points = *opt.schmidt_points;
    }
    const SweepResult result = run_sweep(spec, opt.threads, opt.refine);
    deliver(opt, render(result, format_or(opt, OutputFormat::Csv)));
    return 0;
}

int optimize(const Options &opt)
{
    const AppConfig cfg = config_from(opt);
    ReportInputs in{cfg.ring, cfg.gamma_c, cfg.power, cfg.energy,
                    cfg.bandwidth_factor.value_or(algaas::kBandwidthFactor)};
    const OptimaReport report = report_optima(in);
    if (!opt.format)
    {
        deliver(opt, format_optima_report(report));
        return 0;
    }
    const OutputFormat format = parse_output_format(*opt.format);
    if (format == OutputFormat::Json)
    {
        deliver(opt, optima_report_json(report).dump(2) + "\n");
        return 0;
    }
    std::string out = "geometry,regime,objective,coupling1,coupling2,peak_value,peak_absolute,exact\n";
    for (const auto &e : report.entries)
    {
        out += std::string(to_string(e.record.geometry)) + "," + std::string(to_string(e.record.target.regime)) + "," +
               std::string(to_string(e.record.target.objective)) + "," + number(e.record.couplings[0]) + "," +
               (e.record.couplings.size() > 1 ? number(e.record.couplings[1]) : std::string()) + "," +
               number(e.record.peak_value) + "," + (e.peak_absolute ? number(*e.peak_absolute) : std::string()) +
               "," + (e.record.exact ? "1" : "0") + "\n";
    }
    deliver(opt, out);
    return 0;
}

int schmidt(const Options &opt)
{
    const AppConfig cfg = config_from(opt);
    if (cfg.pump_mode == PumpMode::Cw)
    {
        throw ValidationError("schmidt needs a pulsed pump ([pump] mode = pulsed)");
    }
    const CouplingConfig config = cfg.coupling_config();
    const PumpSpec pump = cfg.pump_spec();
    SchmidtGridOptions grid = cfg.schmidt;
    if (opt.grid)
    {
        grid.points = *opt.grid;
    }
    if (opt.schmidt_points)
    {
        grid.points = *opt.schmidt_points;
    }
    const WavepacketGrid wp = discretize_wavepacket(cfg.ring, config, pump, grid);
    const SchmidtResult r = schmidt_spectrum(wp);

    KeyValues kv;
    kv.add("geometry", std::string(to_string(cfg.geometry)));
    kv.add("points", grid.points);
    kv.add("t_max_over_gamma", grid.t_max_over_gamma);
    kv.add("K", r.schmidt_number);
    kv.add("K_minus_1", r.schmidt_number - 1.0);
    kv.add("grid_pair_prob", wp.weighted_norm());
    kv.add("psi", pulsed_pair_prob(cfg.ring, config, pump.energy(), pump.delta_omega(config.pump_gamma())));
    for (std::size_t k = 0; k < std::min<std::size_t>(10, r.lambdas.size()); ++k)
    {
        kv.add("lambda_" + std::to_string(k), r.lambdas[k]);
    }
    deliver(opt, kv.render(format_or(opt, OutputFormat::Csv)));
    return 0;
}

int validate(const Options &opt)
{
    const ValidationReport report = cross_validate_optima();
    if (opt.format && parse_output_format(*opt.format) == OutputFormat::Json)
    {
        json entries = json::array();
        for (const auto &e : report.entries)
        {
            entries.push_back({{"geometry", to_string(e.reference.geometry)},
                               {"regime", to_string(e.reference.target.regime)},
                               {"objective", to_string(e.reference.target.objective)},
                               {"reference_couplings", e.reference.couplings},
                               {"reference_peak", e.reference.peak_value},
                               {"numeric_couplings", e.numeric.couplings},
                               {"numeric_peak", e.numeric.peak_value},
                               {"coupling_error", e.coupling_error},
                               {"value_error", e.value_error},
                               {"coupling_tolerance", e.coupling_tolerance},
                               {"value_tolerance", e.value_tolerance},
                               {"value_error_relative", e.reference.exact},
                               {"passed", e.passed}});
        }
        deliver(opt, json{{"failures", report.failures()}, {"entries", entries}}.dump(2) + "\n");
    }
    else
    {
        deliver(opt, format_validation_report(report));
    }
    if (report.failures() > 0)
    {
        std::cerr << "validate: " << report.failures() << " optimum/optima disagree with the reference table\n";
        return 2;
    }
    return 0;
}

int figure2(const Options &opt)
{
    return run_figure(opt, figure2_specs(opt.grid.value_or(200)), "figure2");
}

int figure3(const Options &opt)
{
    return run_figure(opt, figure3_specs(opt.grid.value_or(101), opt.schmidt_points.value_or(128)), "figure3");
}
} // namespace sfwm::cli
