#include "sfwm/cw.hpp"

#include <cmath>

namespace sfwm
{
namespace
{
// tgamma_a^2 / tgamma^4: the pump's share of the intracavity field squared.
double pump_factor(const CouplingConfig &config)
{
    const double ratio = config.pump().a / (config.pump_gamma() * config.pump_gamma());
    return ratio * ratio;
}

double require_power(double power)
{
    if (!(std::isfinite(power) && power > 0.0))
    {
        throw ValidationError("CW pump power must be positive and finite");
    }
    return power;
}
} // namespace

double cw_single_rate(const RingParams &ring, const CouplingConfig &config, double power)
{
    const double amplitude = ring.nonlinear_coefficient() * require_power(power);
    const double gamma = config.gamma();
    return 32.0 * pump_factor(config) * config.output_gamma() / (gamma * gamma) * amplitude * amplitude;
}

double cw_pair_rate(const RingParams &ring, const CouplingConfig &config, double power)
{
    const double amplitude = ring.nonlinear_coefficient() * require_power(power);
    const double gamma = config.gamma();
    const double mu = config.output_gamma();
    return 32.0 * pump_factor(config) * mu * mu / (gamma * gamma * gamma) * amplitude * amplitude;
}

std::complex<double> cw_wavepacket(const RingParams &ring, const CouplingConfig &config, double power, double tau)
{
    const double amplitude = ring.nonlinear_coefficient() * require_power(power);
    const double gamma = config.gamma();
    const double peak =
        4.0 * config.pump().a * config.output_gamma() / (config.pump_gamma() * config.pump_gamma() * gamma) * amplitude;
    return {peak * std::exp(-0.5 * gamma * std::abs(tau)), 0.0};
}

CwObservables cw_observables(const RingParams &ring, const CouplingConfig &config, double power)
{
    const double singles = cw_single_rate(ring, config, power);
    return {singles, singles, cw_pair_rate(ring, config, power), config.heralding_efficiency()};
}

double cw_pump_buildup(const CouplingConfig &config, double detuning)
{
    const double tgamma = config.pump_gamma();
    return 4.0 * config.biphoton().c * config.pump().a / (tgamma * tgamma + 4.0 * detuning * detuning);
}

Accidentals cw_accidentals_and_car(const RingParams &ring, const CouplingConfig &config, double power,
                                   double coincidence_window)
{
    if (!(std::isfinite(coincidence_window) && coincidence_window > 0.0))
    {
        throw ValidationError("coincidence window T_R must be positive and finite");
    }
    const auto rates = cw_observables(ring, config, power);
    Accidentals result;
    result.rate = coincidence_window * rates.signal_rate * rates.idler_rate;
    if (result.rate > 0.0)
    {
        result.car = rates.pair_rate / result.rate;
    }
    return result;
}

double cw_single_rate_normalized(const CouplingConfig &config)
{
    const double gamma = config.gamma();
    const double gc = config.biphoton().c;
    return 32.0 * pump_factor(config) * config.output_gamma() / (gamma * gamma) * gc * gc * gc;
}

double cw_pair_rate_normalized(const CouplingConfig &config)
{
    const double gamma = config.gamma();
    const double mu = config.output_gamma();
    const double gc = config.biphoton().c;
    return 32.0 * pump_factor(config) * mu * mu / (gamma * gamma * gamma) * gc * gc * gc;
}
} // namespace sfwm
