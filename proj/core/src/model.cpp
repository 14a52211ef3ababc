#include "sfwm/model.hpp"

#include <cmath>
#include <sstream>

namespace sfwm
{
namespace
{
std::string fmt_value(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_positive(double value, const char *what)
{
    if (!(std::isfinite(value) && value > 0.0))
    {
        throw ValidationError(std::string(what) + " must be positive and finite (got " + fmt_value(value) + ")");
    }
}

void require_nonnegative(double value, const char *what)
{
    if (!(std::isfinite(value) && value >= 0.0))
    {
        throw ValidationError(std::string(what) + " must be >= 0 and finite (got " + fmt_value(value) + ")");
    }
}

void require_equal(double lhs, double rhs, const char *condition, Geometry geometry)
{
    if (lhs != rhs)
    {
        throw ValidationError("CouplingConfig: " + std::string(to_string(geometry)) + " requires " + condition +
                              " (got " + fmt_value(lhs) + " vs " + fmt_value(rhs) + ")");
    }
}
} // namespace

std::string_view to_string(Geometry geometry)
{
    switch (geometry)
    {
    case Geometry::AllPassIdentical:
        return "all_pass";
    case Geometry::AddDropIdentical:
        return "add_drop_identical";
    case Geometry::AddDropDistinct:
        return "add_drop_distinct";
    }
    return "unknown";
}

std::string_view to_string(OutputPort port)
{
    return port == OutputPort::A ? "a" : "b";
}

Geometry parse_geometry(std::string_view text)
{
    if (text == "all_pass" || text == "AllPassIdentical" || text == "all_pass_identical")
    {
        return Geometry::AllPassIdentical;
    }
    if (text == "add_drop_identical" || text == "AddDropIdentical")
    {
        return Geometry::AddDropIdentical;
    }
    if (text == "add_drop_distinct" || text == "AddDropDistinct")
    {
        return Geometry::AddDropDistinct;
    }
    throw ValidationError("unknown geometry '" + std::string(text) +
                          "' (expected all_pass, add_drop_identical or add_drop_distinct)");
}

RingParams::RingParams(double n2, double group_velocity, double mode_area, double circumference, double omega0)
    : n2_(n2), group_velocity_(group_velocity), mode_area_(mode_area), circumference_(circumference), omega0_(omega0)
{
    require_positive(n2, "RingParams.n2");
    require_positive(group_velocity, "RingParams.group_velocity");
    require_positive(mode_area, "RingParams.mode_area");
    require_positive(circumference, "RingParams.circumference");
    require_positive(omega0, "RingParams.omega0");
}

RingParams RingParams::from_wavelength(double n2, double group_velocity, double mode_area, double circumference,
                                       double wavelength)
{
    require_positive(wavelength, "RingParams.wavelength");
    return {n2, group_velocity, mode_area, circumference, kTwoPi * kSpeedOfLight / wavelength};
}

double RingParams::nonlinear_coefficient() const
{
    return n2_ * group_velocity_ * group_velocity_ * omega0_ / (kSpeedOfLight * mode_area_ * circumference_);
}

CouplingConfig::CouplingConfig(Geometry geometry, CouplingRates biphoton, CouplingRates pump, OutputPort port)
    : geometry_(geometry), biphoton_(biphoton), pump_(pump), port_(port)
{
    require_nonnegative(biphoton.a, "CouplingConfig.gamma_a");
    require_nonnegative(biphoton.b, "CouplingConfig.gamma_b");
    require_positive(biphoton.c, "CouplingConfig.gamma_c");
    require_nonnegative(pump.a, "CouplingConfig.tgamma_a");
    require_nonnegative(pump.b, "CouplingConfig.tgamma_b");
    require_positive(pump.c, "CouplingConfig.tgamma_c");

    switch (geometry)
    {
    case Geometry::AllPassIdentical:
        require_equal(biphoton.b, 0.0, "gamma_b == 0", geometry);
        require_equal(pump.b, 0.0, "tgamma_b == 0", geometry);
        require_equal(pump.a, biphoton.a, "tgamma_a == gamma_a", geometry);
        require_equal(pump.c, biphoton.c, "tgamma_c == gamma_c", geometry);
        if (port != OutputPort::A)
        {
            throw ValidationError("CouplingConfig: all_pass requires output_port == a");
        }
        break;
    case Geometry::AddDropIdentical:
        require_equal(pump.a, biphoton.a, "tgamma_a == gamma_a", geometry);
        require_equal(pump.b, biphoton.b, "tgamma_b == gamma_b", geometry);
        require_equal(pump.c, biphoton.c, "tgamma_c == gamma_c", geometry);
        if (port != OutputPort::B)
        {
            throw ValidationError("CouplingConfig: add_drop_identical requires output_port == b");
        }
        break;
    case Geometry::AddDropDistinct:
        require_equal(biphoton.a, 0.0, "gamma_a == 0", geometry);
        require_equal(pump.b, 0.0, "tgamma_b == 0", geometry);
        if (port != OutputPort::B)
        {
            throw ValidationError("CouplingConfig: add_drop_distinct requires output_port == b");
        }
        break;
    }
}

CouplingConfig CouplingConfig::all_pass(double gamma_a, double gamma_c)
{
    const CouplingRates rates{gamma_a, 0.0, gamma_c};
    return {Geometry::AllPassIdentical, rates, rates, OutputPort::A};
}

CouplingConfig CouplingConfig::add_drop_identical(double gamma_a, double gamma_b, double gamma_c)
{
    const CouplingRates rates{gamma_a, gamma_b, gamma_c};
    return {Geometry::AddDropIdentical, rates, rates, OutputPort::B};
}

CouplingConfig CouplingConfig::add_drop_distinct(double pump_gamma_a, double gamma_b, double gamma_c,
                                                 std::optional<double> pump_gamma_c)
{
    return {Geometry::AddDropDistinct, CouplingRates{0.0, gamma_b, gamma_c},
            CouplingRates{pump_gamma_a, 0.0, pump_gamma_c.value_or(gamma_c)}, OutputPort::B};
}

Linewidths total_linewidths(const CouplingConfig &config)
{
    return {config.gamma(), config.pump_gamma()};
}

QualityFactors quality_factors(const RingParams &ring, const CouplingConfig &config)
{
    return {ring.omega0() / config.biphoton().c, ring.omega0() / config.gamma()};
}

double rate_scale_R0(const RingParams &ring, double power, double gamma_c)
{
    require_positive(power, "rate_scale_R0.power");
    require_positive(gamma_c, "rate_scale_R0.gamma_c");
    const double amplitude = ring.nonlinear_coefficient() * power;
    return amplitude * amplitude / (gamma_c * gamma_c * gamma_c);
}

double prob_scale_p0(const RingParams &ring, double energy, double bandwidth_factor, double gamma_c,
                     Warnings *warnings)
{
    require_positive(energy, "prob_scale_p0.energy");
    require_positive(bandwidth_factor, "prob_scale_p0.bandwidth_factor");
    require_positive(gamma_c, "prob_scale_p0.gamma_c");
    if (bandwidth_factor < 10.0)
    {
        warn(warnings, "bandwidth factor B = " + fmt_value(bandwidth_factor) +
                           " < 10: broadband assumption DeltaOmega >> tgamma is weak");
    }
    const double amplitude = kTwoPi * ring.nonlinear_coefficient() * energy / (bandwidth_factor * gamma_c);
    return amplitude * amplitude;
}

PumpSpec PumpSpec::cw(double power)
{
    require_positive(power, "PumpSpec.power");
    PumpSpec spec;
    spec.mode_ = PumpMode::Cw;
    spec.power_ = power;
    return spec;
}

PumpSpec PumpSpec::pulsed_with_factor(double energy, double bandwidth_factor)
{
    require_positive(energy, "PumpSpec.energy");
    require_positive(bandwidth_factor, "PumpSpec.bandwidth_factor");
    PumpSpec spec;
    spec.mode_ = PumpMode::Pulsed;
    spec.energy_ = energy;
    spec.bandwidth_mode_ = BandwidthMode::BandwidthFactor;
    spec.bandwidth_ = bandwidth_factor;
    return spec;
}

PumpSpec PumpSpec::pulsed_with_bandwidth(double energy, double delta_omega)
{
    require_positive(energy, "PumpSpec.energy");
    require_positive(delta_omega, "PumpSpec.delta_omega");
    PumpSpec spec;
    spec.mode_ = PumpMode::Pulsed;
    spec.energy_ = energy;
    spec.bandwidth_mode_ = BandwidthMode::AbsoluteDeltaOmega;
    spec.bandwidth_ = delta_omega;
    return spec;
}

PumpSpec PumpSpec::pulsed_tabulated(double energy, TabulatedSpectrum spectrum)
{
    require_positive(energy, "PumpSpec.energy");
    const double norm2 = spectrum.norm_squared();
    if (!(std::abs(norm2 - 1.0) <= kSpectrumNormTolerance))
    {
        throw ValidationError("PumpSpec: tabulated spectrum must satisfy integral |A|^2 dOmega = 1 to 1e-9 (got " +
                              fmt_value(norm2) + ")");
    }
    PumpSpec spec;
    spec.mode_ = PumpMode::Pulsed;
    spec.energy_ = energy;
    spec.bandwidth_mode_ = BandwidthMode::AbsoluteDeltaOmega;
    spec.bandwidth_ = spectrum.upper() - spectrum.lower();
    spec.tabulated_ = std::move(spectrum);
    return spec;
}

double PumpSpec::power() const
{
    if (mode_ != PumpMode::Cw)
    {
        throw ValidationError("PumpSpec: power is only defined for a CW pump");
    }
    return power_;
}

double PumpSpec::energy() const
{
    if (mode_ != PumpMode::Pulsed)
    {
        throw ValidationError("PumpSpec: pulse energy is only defined for a pulsed pump");
    }
    return energy_;
}

double PumpSpec::delta_omega(double pump_gamma) const
{
    if (mode_ != PumpMode::Pulsed)
    {
        throw ValidationError("PumpSpec: bandwidth is only defined for a pulsed pump");
    }
    return bandwidth_mode_ == BandwidthMode::BandwidthFactor ? bandwidth_ * pump_gamma : bandwidth_;
}
} // namespace sfwm
