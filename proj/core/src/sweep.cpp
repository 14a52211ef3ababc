#include "sfwm/sweep.hpp"

#include "sfwm/cw.hpp"
#include "sfwm/parallel.hpp"
#include "sfwm/pulsed.hpp"
#include "sfwm/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sfwm
{
namespace
{
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_rate(SweepOutput o)
{
    return o == SweepOutput::Rs || o == SweepOutput::Rsi || o == SweepOutput::Ps || o == SweepOutput::Psi;
}

bool needs_cw(SweepOutput o)
{
    return o == SweepOutput::Rs || o == SweepOutput::Rsi || o == SweepOutput::Car;
}

void validate_axis(const SweepAxis &axis, const char *label)
{
    const std::string which(label);
    if (!(std::isfinite(axis.min) && axis.min > 0.0))
    {
        throw ValidationError(which + ": min must be positive");
    }
    if (!(std::isfinite(axis.max) && axis.max > axis.min))
    {
        throw ValidationError(which + ": max must exceed min");
    }
    if (axis.points < 2)
    {
        throw ValidationError(which + ": at least 2 points required");
    }
}

std::size_t axis_slot(Geometry geometry, const std::string &name)
{
    const auto names = coupling_names(geometry);
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
    {
        std::string allowed;
        for (const auto &n : names)
        {
            allowed += (allowed.empty() ? "" : ", ") + n;
        }
        throw ValidationError("axis '" + name + "' is not a coupling of geometry " + std::string(to_string(geometry)) +
                              " (expected " + allowed + ")");
    }
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<double> base_couplings(const SweepSpec &spec)
{
    if (!spec.fixed_couplings.empty())
    {
        return spec.fixed_couplings;
    }
    return std::vector<double>(static_cast<std::size_t>(coupling_dimension(spec.geometry)), 1.0);
}

nlohmann::json couplings_json(Geometry geometry, std::span<const double> x)
{
    nlohmann::json out = nlohmann::json::object();
    const auto names = coupling_names(geometry);
    for (std::size_t d = 0; d < names.size() && d < x.size(); ++d)
    {
        out[names[d]] = x[d];
    }
    return out;
}

nlohmann::json axis_json(const SweepAxis &axis)
{
    return {{"name", axis.name},
            {"min", axis.min},
            {"max", axis.max},
            {"points", axis.points},
            {"scale", to_string(axis.scale)}};
}

// Local maximization of one output inside the box [lo, hi] (gamma_c units).
GridMaximum refine_in_box(const SweepSpec &spec, SweepOutput output, const std::vector<double> &start,
                          const std::vector<std::size_t> &slots, const std::vector<double> &lo,
                          const std::vector<double> &hi)
{
    SweepSpec single = spec;
    single.outputs = {output};
    // The optimizer works on [1, 2]^d; map that onto the cell box.
    auto to_couplings = [&](std::span<const double> u) {
        std::vector<double> x = start;
        for (std::size_t d = 0; d < slots.size(); ++d)
        {
            x[slots[d]] = lo[d] + (u[d] - 1.0) * (hi[d] - lo[d]);
        }
        return x;
    };
    OptimizerOptions opt;
    opt.lower = 1.0;
    opt.upper = 2.0;
    opt.scan_points = 9;
    const auto result = maximize(
        [&](std::span<const double> u) { return evaluate_outputs(single, to_couplings(u)).front(); },
        static_cast<int>(slots.size()), opt);
    return {to_couplings(result.argmax), result.value};
}
} // namespace

std::vector<double> SweepAxis::values() const
{
    std::vector<double> v(static_cast<std::size_t>(std::max(points, 0)));
    for (int i = 0; i < points; ++i)
    {
        const double t = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
        v[static_cast<std::size_t>(i)] =
            scale == AxisScale::Linear ? min + t * (max - min) : min * std::pow(max / min, t);
    }
    if (points > 1)
    {
        v.back() = max;
    }
    return v;
}

std::string_view to_string(SweepOutput output)
{
    switch (output)
    {
    case SweepOutput::Rs:
        return "Rs";
    case SweepOutput::Rsi:
        return "Rsi";
    case SweepOutput::Ps:
        return "ps";
    case SweepOutput::Psi:
        return "psi";
    case SweepOutput::K:
        return "K";
    case SweepOutput::Car:
        return "CAR";
    }
    return "?";
}

std::string_view to_string(AxisScale scale)
{
    return scale == AxisScale::Linear ? "linear" : "log";
}

SweepOutput parse_sweep_output(std::string_view text)
{
    for (auto o : {SweepOutput::Rs, SweepOutput::Rsi, SweepOutput::Ps, SweepOutput::Psi, SweepOutput::K,
                   SweepOutput::Car})
    {
        if (text == to_string(o))
        {
            return o;
        }
    }
    throw ValidationError("unknown sweep output '" + std::string(text) + "' (expected Rs, Rsi, ps, psi, K or CAR)");
}

AxisScale parse_axis_scale(std::string_view text)
{
    if (text == "linear")
    {
        return AxisScale::Linear;
    }
    if (text == "log")
    {
        return AxisScale::Log;
    }
    throw ValidationError("unknown axis scale '" + std::string(text) + "' (expected linear or log)");
}

void SweepSpec::validate() const
{
    if (outputs.empty())
    {
        throw ValidationError("sweep: at least one output required");
    }
    for (std::size_t i = 0; i < outputs.size(); ++i)
    {
        if (std::find(outputs.begin(), outputs.begin() + static_cast<std::ptrdiff_t>(i), outputs[i]) !=
            outputs.begin() + static_cast<std::ptrdiff_t>(i))
        {
            throw ValidationError("sweep: output " + std::string(to_string(outputs[i])) + " listed twice");
        }
        const bool cw_output = needs_cw(outputs[i]);
        if (cw_output != (regime == PumpRegime::Cw))
        {
            throw ValidationError("sweep: output " + std::string(to_string(outputs[i])) + " requires " +
                                  (cw_output ? "a CW" : "a pulsed") + " pump regime");
        }
    }
    if (pump.is_cw() != (regime == PumpRegime::Cw))
    {
        throw ValidationError("sweep: pump mode does not match the pump regime");
    }
    if (std::find(outputs.begin(), outputs.end(), SweepOutput::K) != outputs.end() &&
        pump.spectrum_kind() != SpectrumKind::FlattopAnalytic)
    {
        throw ValidationError("sweep: K requires the broadband flattop pump spectrum");
    }
    if (!(std::isfinite(gamma_c) && gamma_c > 0.0))
    {
        throw ValidationError("sweep: gamma_c must be positive");
    }
    if (std::find(outputs.begin(), outputs.end(), SweepOutput::Car) != outputs.end() &&
        !(std::isfinite(coincidence_window) && coincidence_window > 0.0))
    {
        throw ValidationError("sweep: CAR requires a positive coincidence window");
    }
    validate_axis(axis1, "axis1");
    const std::size_t s1 = axis_slot(geometry, axis1.name);
    if (axis2)
    {
        validate_axis(*axis2, "axis2");
        if (axis_slot(geometry, axis2->name) == s1)
        {
            throw ValidationError("sweep: axis1 and axis2 sweep the same coupling");
        }
    }
    if (!fixed_couplings.empty())
    {
        if (fixed_couplings.size() != static_cast<std::size_t>(coupling_dimension(geometry)))
        {
            throw ValidationError("sweep: fixed couplings must list every coupling of the geometry");
        }
        for (double x : fixed_couplings)
        {
            if (!(std::isfinite(x) && x > 0.0))
            {
                throw ValidationError("sweep: fixed couplings must be positive");
            }
        }
    }
}

std::vector<std::string> SweepResult::column_names() const
{
    std::vector<std::string> names{spec.axis1.name};
    if (spec.axis2)
    {
        names.push_back(spec.axis2->name);
    }
    for (auto o : spec.outputs)
    {
        names.emplace_back(to_string(o));
    }
    return names;
}

std::vector<double> evaluate_outputs(const SweepSpec &spec, std::span<const double> couplings)
{
    const CouplingConfig config = make_config(spec.geometry, couplings, spec.gamma_c);
    std::vector<double> values;
    values.reserve(spec.outputs.size());
    std::optional<PulsedObservables> pulsed;
    for (auto o : spec.outputs)
    {
        switch (o)
        {
        case SweepOutput::Rs:
            values.push_back(cw_single_rate(spec.ring, config, spec.pump.power()));
            break;
        case SweepOutput::Rsi:
            values.push_back(cw_pair_rate(spec.ring, config, spec.pump.power()));
            break;
        case SweepOutput::Car:
            values.push_back(
                cw_accidentals_and_car(spec.ring, config, spec.pump.power(), spec.coincidence_window).car.value_or(kNaN));
            break;
        case SweepOutput::Ps:
        case SweepOutput::Psi:
            if (!pulsed)
            {
                pulsed = pulsed_observables(spec.ring, config, spec.pump);
            }
            values.push_back(o == SweepOutput::Ps ? pulsed->signal_prob : pulsed->pair_prob);
            break;
        case SweepOutput::K:
            values.push_back(
                schmidt_spectrum(discretize_wavepacket(spec.ring, config, spec.pump, spec.schmidt)).schmidt_number);
            break;
        }
    }
    return values;
}

nlohmann::json spec_to_json(const SweepSpec &spec)
{
    nlohmann::json j;
    j["geometry"] = to_string(spec.geometry);
    j["pump_regime"] = to_string(spec.regime);
    j["axis1"] = axis_json(spec.axis1);
    j["axis2"] = spec.axis2 ? axis_json(*spec.axis2) : nlohmann::json(nullptr);
    j["outputs"] = nlohmann::json::array();
    for (auto o : spec.outputs)
    {
        j["outputs"].push_back(to_string(o));
    }
    j["gamma_c"] = spec.gamma_c;
    j["fixed_couplings"] = couplings_json(spec.geometry, base_couplings(spec));
    j["ring"] = {{"n2", spec.ring.n2()},
                 {"group_velocity", spec.ring.group_velocity()},
                 {"mode_area", spec.ring.mode_area()},
                 {"circumference", spec.ring.circumference()},
                 {"omega0", spec.ring.omega0()}};
    nlohmann::json pump;
    if (spec.pump.is_cw())
    {
        pump["mode"] = "cw";
        pump["power"] = spec.pump.power();
    }
    else
    {
        pump["mode"] = "pulsed";
        pump["energy"] = spec.pump.energy();
        if (spec.pump.spectrum_kind() == SpectrumKind::Tabulated)
        {
            pump["spectrum"] = "tabulated";
        }
        else if (spec.pump.bandwidth_mode() == BandwidthMode::BandwidthFactor)
        {
            pump["bandwidth_factor"] = spec.pump.bandwidth_value();
        }
        else
        {
            pump["delta_omega"] = spec.pump.bandwidth_value();
        }
    }
    j["pump"] = pump;
    if (std::find(spec.outputs.begin(), spec.outputs.end(), SweepOutput::Car) != spec.outputs.end())
    {
        j["coincidence_window"] = spec.coincidence_window;
    }
    if (std::find(spec.outputs.begin(), spec.outputs.end(), SweepOutput::K) != spec.outputs.end())
    {
        j["schmidt"] = {{"points", spec.schmidt.points}, {"t_max_over_gamma", spec.schmidt.t_max_over_gamma}};
    }
    return j;
}

SweepResult run_sweep(const SweepSpec &spec, int threads, bool refine)
{
    spec.validate();
    const auto v1 = spec.axis1.values();
    const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{kNaN};
    const std::size_t n1 = v1.size();
    const std::size_t count = n1 * v2.size();
    std::vector<std::size_t> slots{axis_slot(spec.geometry, spec.axis1.name)};
    if (spec.axis2)
    {
        slots.push_back(axis_slot(spec.geometry, spec.axis2->name));
    }
    const std::vector<double> base = base_couplings(spec);

    SweepResult result;
    result.spec = spec;
    result.rows.resize(count);
    parallel_for(count, threads, [&](std::size_t i) {
        SweepRow &row = result.rows[i];
        row.coordinates = {v1[i % n1]};
        std::vector<double> x = base;
        x[slots[0]] = v1[i % n1];
        if (spec.axis2)
        {
            row.coordinates.push_back(v2[i / n1]);
            x[slots[1]] = v2[i / n1];
        }
        try
        {
            row.values = evaluate_outputs(spec, x);
        }
        catch (const std::exception &e)
        {
            row.values.assign(spec.outputs.size(), kNaN);
            row.error = e.what();
        }
    });

    nlohmann::json &meta = result.meta;
    meta["version"] = library_version();
    meta["spec"] = spec_to_json(spec);
    meta["columns"] = result.column_names();

    nlohmann::json norm;
    if (spec.regime == PumpRegime::Cw)
    {
        const double r0 = rate_scale_R0(spec.ring, spec.pump.power(), spec.gamma_c);
        norm = {{"R0", r0}, {"R0_over_2", 0.5 * r0}};
    }
    else if (spec.pump.spectrum_kind() == SpectrumKind::FlattopAnalytic &&
             spec.pump.bandwidth_mode() == BandwidthMode::BandwidthFactor)
    {
        norm = {{"p0", prob_scale_p0(spec.ring, spec.pump.energy(), spec.pump.bandwidth_value(), spec.gamma_c)}};
    }
    meta["normalization"] = norm;

    meta["optima"] = nlohmann::json::array();
    for (auto objective : {Objective::OnePhoton, Objective::TwoPhoton})
    {
        const auto rec = analytic_optimum(spec.geometry, {objective, spec.regime});
        nlohmann::json o{{"objective", to_string(objective)},
                         {"couplings", couplings_json(spec.geometry, rec.couplings)},
                         {"peak_value", rec.peak_value},
                         {"exact", rec.exact}};
        const char *unit = spec.regime == PumpRegime::Cw ? "R0" : "p0";
        if (norm.contains(unit))
        {
            o["peak_absolute"] = rec.peak_value * norm[unit].get<double>();
        }
        meta["optima"].push_back(o);
    }

    nlohmann::json grid_maxima = nlohmann::json::object();
    nlohmann::json refined = nlohmann::json::object();
    for (std::size_t k = 0; k < spec.outputs.size(); ++k)
    {
        if (!is_rate(spec.outputs[k]))
        {
            continue;
        }
        std::size_t best = count;
        for (std::size_t i = 0; i < count; ++i)
        {
            const double v = result.rows[i].values[k];
            if (std::isfinite(v) && (best == count || v > result.rows[best].values[k]))
            {
                best = i;
            }
        }
        if (best == count)
        {
            continue;
        }
        std::vector<double> x = base;
        std::vector<double> lo;
        std::vector<double> hi;
        const std::size_t idx[2] = {best % n1, best / n1};
        for (std::size_t d = 0; d < slots.size(); ++d)
        {
            const auto &v = d == 0 ? v1 : v2;
            x[slots[d]] = v[idx[d]];
            lo.push_back(v[idx[d] == 0 ? 0 : idx[d] - 1]);
            hi.push_back(v[std::min(idx[d] + 1, v.size() - 1)]);
        }
        const std::string name(to_string(spec.outputs[k]));
        grid_maxima[name] = {{"couplings", couplings_json(spec.geometry, x)},
                             {"value", result.rows[best].values[k]},
                             {"row", best}};
        if (refine)
        {
            const GridMaximum m = refine_in_box(spec, spec.outputs[k], x, slots, lo, hi);
            refined[name] = {{"couplings", couplings_json(spec.geometry, m.couplings)}, {"value", m.value}};
        }
    }
    meta["grid_maxima"] = grid_maxima;
    if (refine)
    {
        meta["refined_maxima"] = refined;
    }
    return result;
}

std::vector<SweepSpec> figure2_specs(int points)
{
    std::vector<SweepSpec> specs;
    for (auto geometry : {Geometry::AllPassIdentical, Geometry::AddDropIdentical, Geometry::AddDropDistinct})
    {
        SweepSpec s;
        s.geometry = geometry;
        s.regime = PumpRegime::Cw;
        const auto names = coupling_names(geometry);
        s.axis1 = {names[0], 0.05, 5.0, points, AxisScale::Linear};
        if (names.size() > 1)
        {
            s.axis2 = SweepAxis{names[1], 0.05, 5.0, points, AxisScale::Linear};
        }
        s.outputs = {SweepOutput::Rs, SweepOutput::Rsi};
        s.pump = PumpSpec::cw(algaas::kPower);
        specs.push_back(std::move(s));
    }
    return specs;
}

std::vector<SweepSpec> figure3_specs(int points, int schmidt_points)
{
    std::vector<SweepSpec> specs;
    for (auto geometry : {Geometry::AllPassIdentical, Geometry::AddDropIdentical, Geometry::AddDropDistinct})
    {
        SweepSpec s;
        s.geometry = geometry;
        s.regime = PumpRegime::BroadbandPulse;
        const auto names = coupling_names(geometry);
        s.axis1 = {names[0], 0.05, 5.0, points, AxisScale::Linear};
        if (names.size() > 1)
        {
            s.axis2 = SweepAxis{names[1], 0.05, 5.0, points, AxisScale::Linear};
        }
        s.outputs = {SweepOutput::Ps, SweepOutput::Psi, SweepOutput::K};
        s.pump = PumpSpec::pulsed_with_factor(algaas::kPulseEnergy, algaas::kBandwidthFactor);
        s.schmidt.points = schmidt_points;
        specs.push_back(std::move(s));
    }
    return specs;
}
} // namespace sfwm
