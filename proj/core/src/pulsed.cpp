#include "sfwm/pulsed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace sfwm
{
namespace
{
using complex = std::complex<double>;

void check_broadband(double pump_gamma, double delta_omega, Warnings *warnings)
{
    if (!(std::isfinite(delta_omega) && delta_omega > 0.0))
    {
        throw ValidationError("pump bandwidth DeltaOmega must be positive and finite");
    }
    if (delta_omega < pump_gamma)
    {
        std::ostringstream os;
        os << "broadband closed form requires DeltaOmega >= tgamma (DeltaOmega/tgamma = " << delta_omega / pump_gamma
           << ")";
        throw ValidationError(os.str());
    }
    if (delta_omega < 10.0 * pump_gamma)
    {
        std::ostringstream os;
        os << "DeltaOmega/tgamma = " << delta_omega / pump_gamma << " < 10: broadband approximation is weak";
        warn(warnings, os.str());
    }
}

void check_energy(double energy)
{
    if (!(std::isfinite(energy) && energy > 0.0))
    {
        throw ValidationError("pulse energy must be positive and finite");
    }
}

// (2 pi n2 vg^2 omega0 E / (c S L DeltaOmega))^2
double spectral_scale_squared(const RingParams &ring, double energy, double delta_omega)
{
    const double amplitude = kTwoPi * ring.nonlinear_coefficient() * energy / delta_omega;
    return amplitude * amplitude;
}

template <class Spectrum>
complex lineshape_impl(const Spectrum &spectrum, std::span<const double> nodes, double pump_gamma, double omega_sum,
                       const QuadratureOptions &options)
{
    if (!(pump_gamma > 0.0))
    {
        throw ValidationError("effective_pump_lineshape: tgamma must be positive");
    }
    const double lower = std::max(spectrum.lower(), omega_sum - spectrum.upper());
    const double upper = std::min(spectrum.upper(), omega_sum - spectrum.lower());
    if (!(upper > lower))
    {
        return {0.0, 0.0};
    }
    const double half = 0.5 * pump_gamma;
    std::vector<double> points{lower, upper};
    auto add = [&](double x) {
        if (x > lower && x < upper)
        {
            points.push_back(x);
        }
    };
    for (double x : {0.0, omega_sum, -pump_gamma, pump_gamma, omega_sum - pump_gamma, omega_sum + pump_gamma})
    {
        add(x);
    }
    for (double node : nodes)
    {
        add(node);
        add(omega_sum - node);
    }
    auto integrand = [&](double op) -> complex {
        const complex num = spectrum(op) * spectrum(omega_sum - op);
        const complex den = complex(half, -op) * complex(half, -(omega_sum - op));
        return num / den;
    };
    return integrate(integrand, std::span<const double>(points), options).value;
}

template <class Spectrum>
double single_prob_numeric_impl(const RingParams &ring, const CouplingConfig &config, double energy,
                                const Spectrum &spectrum, std::span<const double> nodes,
                                const QuadratureOptions &options)
{
    check_energy(energy);
    const double gamma = config.gamma();
    const double tgamma = config.pump_gamma();
    const double quarter = 0.25 * gamma * gamma;
    const QuadratureOptions inner_options{1e-11, 0.0, 10'000};
    const QuadratureOptions lineshape_options{std::min(1e-8, 0.1 * options.relative_tolerance), 0.0,
                                              options.max_panels};

    // integral dOmega_s / ((gamma^2/4 + Os^2)(gamma^2/4 + (S - Os)^2))
    auto signal_idler_overlap = [&](double omega_sum) {
        auto f = [&](double os) {
            const double oi = omega_sum - os;
            return 1.0 / ((quarter + os * os) * (quarter + oi * oi));
        };
        const std::array<double, 2> features{0.0, omega_sum};
        return integrate_real_line(f, 0.5 * gamma, std::span<const double>(features), inner_options).value;
    };

    auto outer = [&](double omega_sum) {
        const complex fp = lineshape_impl(spectrum, nodes, tgamma, omega_sum, lineshape_options);
        const double weight = std::norm(fp);
        if (weight == 0.0)
        {
            return 0.0;
        }
        return weight * signal_idler_overlap(omega_sum);
    };

    const double lo = 2.0 * spectrum.lower();
    const double hi = 2.0 * spectrum.upper();
    std::vector<double> points{lo, hi};
    for (double x : {0.0, -tgamma, tgamma, -gamma, gamma, -10.0 * tgamma, 10.0 * tgamma})
    {
        if (x > lo && x < hi)
        {
            points.push_back(x);
        }
    }
    const double integral = integrate(outer, std::span<const double>(points), options).value;

    const double amplitude = ring.nonlinear_coefficient() * energy;
    const double ta = config.pump().a;
    return ta * ta * config.output_gamma() * gamma / (4.0 * std::numbers::pi * std::numbers::pi) * amplitude *
           amplitude * integral;
}
} // namespace

complex flattop_lineshape_broadband(double pump_gamma, double delta_omega, double omega_sum, Warnings *warnings)
{
    check_broadband(pump_gamma, delta_omega, warnings);
    return (kTwoPi / delta_omega) / complex(pump_gamma, -omega_sum);
}

complex effective_pump_lineshape(const FlattopSpectrum &spectrum, double pump_gamma, double omega_sum,
                                 const QuadratureOptions &options)
{
    if (!(spectrum.delta_omega > 0.0))
    {
        throw ValidationError("FlattopSpectrum: delta_omega must be positive");
    }
    return lineshape_impl(spectrum, {}, pump_gamma, omega_sum, options);
}

complex effective_pump_lineshape(const TabulatedSpectrum &spectrum, double pump_gamma, double omega_sum,
                                 const QuadratureOptions &options)
{
    return lineshape_impl(spectrum, spectrum.omega(), pump_gamma, omega_sum, options);
}

double pulsed_wavepacket_shape(double pump_gamma, double gamma, double ts, double ti)
{
    if (ts < 0.0 || ti < 0.0)
    {
        return 0.0;
    }
    const double m = std::min(ts, ti);
    const double envelope = std::exp(-0.5 * gamma * (ts + ti));
    const double detuning = pump_gamma - gamma;
    if (std::abs(detuning) < kDegenerateLimitThreshold * gamma)
    {
        return envelope * m;
    }
    return envelope * (-std::expm1(-detuning * m)) / detuning;
}

complex pulsed_wavepacket(const RingParams &ring, const CouplingConfig &config, double energy, double delta_omega,
                          double ts, double ti)
{
    check_energy(energy);
    check_broadband(config.pump_gamma(), delta_omega, nullptr);
    const double scale = kTwoPi * ring.nonlinear_coefficient() * energy / delta_omega;
    return {config.pump().a * config.output_gamma() * scale *
                pulsed_wavepacket_shape(config.pump_gamma(), config.gamma(), ts, ti),
            0.0};
}

double pulsed_pair_prob(const RingParams &ring, const CouplingConfig &config, double energy, double delta_omega)
{
    check_energy(energy);
    check_broadband(config.pump_gamma(), delta_omega, nullptr);
    const double tgamma = config.pump_gamma();
    const double gamma = config.gamma();
    const double ta = config.pump().a;
    const double mu = config.output_gamma();
    return ta * ta * mu * mu / (tgamma * gamma * gamma * (tgamma + gamma)) *
           spectral_scale_squared(ring, energy, delta_omega);
}

double pulsed_single_prob(const RingParams &ring, const CouplingConfig &config, double energy, double delta_omega)
{
    check_energy(energy);
    check_broadband(config.pump_gamma(), delta_omega, nullptr);
    const double tgamma = config.pump_gamma();
    const double gamma = config.gamma();
    const double ta = config.pump().a;
    return ta * ta * config.output_gamma() / (tgamma * gamma * (tgamma + gamma)) *
           spectral_scale_squared(ring, energy, delta_omega);
}

double pulsed_single_prob_normalized(const CouplingConfig &config)
{
    const double tgamma = config.pump_gamma();
    const double gamma = config.gamma();
    const double ta = config.pump().a;
    const double gc = config.biphoton().c;
    return ta * ta * config.output_gamma() * gc * gc / (tgamma * tgamma * tgamma * gamma * (tgamma + gamma));
}

double pulsed_pair_prob_normalized(const CouplingConfig &config)
{
    const double tgamma = config.pump_gamma();
    const double gamma = config.gamma();
    const double ta = config.pump().a;
    const double mu = config.output_gamma();
    const double gc = config.biphoton().c;
    return ta * ta * mu * mu * gc * gc / (tgamma * tgamma * tgamma * gamma * gamma * (tgamma + gamma));
}

double pulsed_single_prob_numeric(const RingParams &ring, const CouplingConfig &config, double energy,
                                  const FlattopSpectrum &spectrum, const QuadratureOptions &options)
{
    if (!(spectrum.delta_omega > 0.0))
    {
        throw ValidationError("FlattopSpectrum: delta_omega must be positive");
    }
    return single_prob_numeric_impl(ring, config, energy, spectrum, {}, options);
}

double pulsed_single_prob_numeric(const RingParams &ring, const CouplingConfig &config, double energy,
                                  const TabulatedSpectrum &spectrum, const QuadratureOptions &options)
{
    return single_prob_numeric_impl(ring, config, energy, spectrum, spectrum.omega(), options);
}

PulsedObservables pulsed_observables(const RingParams &ring, const CouplingConfig &config, const PumpSpec &pump,
                                     Warnings *warnings)
{
    if (pump.is_cw())
    {
        throw ValidationError("pulsed_observables requires a pulsed pump");
    }
    PulsedObservables obs;
    if (pump.spectrum_kind() == SpectrumKind::Tabulated)
    {
        obs.signal_prob = pulsed_single_prob_numeric(ring, config, pump.energy(), *pump.tabulated());
        obs.pair_prob = config.output_gamma() / config.gamma() * obs.signal_prob;
        obs.method = PulsedMethod::NumericQuadrature;
    }
    else
    {
        const double delta_omega = pump.delta_omega(config.pump_gamma());
        check_broadband(config.pump_gamma(), delta_omega, warnings);
        obs.signal_prob = pulsed_single_prob(ring, config, pump.energy(), delta_omega);
        obs.pair_prob = pulsed_pair_prob(ring, config, pump.energy(), delta_omega);
        obs.method = PulsedMethod::BroadbandClosedForm;
    }
    obs.idler_prob = obs.signal_prob;
    if (obs.signal_prob > 0.1)
    {
        std::ostringstream os;
        os << "p_s = " << obs.signal_prob << " per pulse exceeds 0.1: single-pair perturbative regime is strained";
        warn(warnings, os.str());
    }
    return obs;
}
} // namespace sfwm
