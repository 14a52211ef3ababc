#pragma once

#include "sfwm/model.hpp"
#include "sfwm/quadrature.hpp"
#include "sfwm/spectrum.hpp"

#include <complex>

namespace sfwm
{
enum class PulsedMethod
{
    BroadbandClosedForm,
    NumericQuadrature,
};

struct PulsedObservables
{
    double signal_prob = 0.0; // p_s per pulse
    double idler_prob = 0.0;  // p_i per pulse (equal to p_s)
    double pair_prob = 0.0;   // p_si per pulse
    PulsedMethod method = PulsedMethod::BroadbandClosedForm;
};

// Relative |tgamma - gamma| / gamma below which the wavepacket uses the
// degenerate (tgamma -> gamma) limit.
inline constexpr double kDegenerateLimitThreshold = 1e-6;

// Broadband flattop lineshape (2 pi / DeltaOmega) / (tgamma - i omega_sum).
// ValidationError when DeltaOmega < tgamma; warning when DeltaOmega < 10 tgamma.
std::complex<double> flattop_lineshape_broadband(double pump_gamma, double delta_omega, double omega_sum,
                                                 Warnings *warnings = nullptr);

// Effective pump lineshape f_p(omega_sum), integrating over the pump frequency
// Omega_p:  A(Op) A(S - Op) / ((tgamma/2 - i Op)(tgamma/2 - i (S - Op))).
std::complex<double> effective_pump_lineshape(const FlattopSpectrum &spectrum, double pump_gamma, double omega_sum,
                                              const QuadratureOptions &options = {1e-8, 0.0, 10'000});
std::complex<double> effective_pump_lineshape(const TabulatedSpectrum &spectrum, double pump_gamma,
                                              double omega_sum,
                                              const QuadratureOptions &options = {1e-8, 0.0, 10'000});

// Coupling- and energy-free shape of the broadband wavepacket:
// e^{-gamma (ts+ti)/2} [1 - e^{-(tgamma-gamma) min(ts,ti)}] / (tgamma - gamma) u(ts) u(ti),
// switching to e^{-gamma (ts+ti)/2} min(ts,ti) when |tgamma-gamma| < 1e-6 gamma.
double pulsed_wavepacket_shape(double pump_gamma, double gamma, double ts, double ti);

// Closed-form joint temporal amplitude (1/s) for a broadband flattop pump.
std::complex<double> pulsed_wavepacket(const RingParams &ring, const CouplingConfig &config, double energy,
                                       double delta_omega, double ts, double ti);

// p_si = tgamma_a^2 gamma_mu^2 / (tgamma gamma^2 (tgamma+gamma)) (2 pi n2 vg^2 omega0 E / (c S L DeltaOmega))^2
double pulsed_pair_prob(const RingParams &ring, const CouplingConfig &config, double energy, double delta_omega);

// p_s = p_i = tgamma_a^2 gamma_mu / (tgamma gamma (tgamma+gamma)) (...)^2
double pulsed_single_prob(const RingParams &ring, const CouplingConfig &config, double energy, double delta_omega);

// Per-pulse probabilities in units of p0 with DeltaOmega = B tgamma (fixed pulse energy).
double pulsed_single_prob_normalized(const CouplingConfig &config);
double pulsed_pair_prob_normalized(const CouplingConfig &config);

// p_s for an arbitrary spectrum by double quadrature over (Omega_s, Omega_i),
// reparametrized by the sum frequency so that each f_p value is computed once.
double pulsed_single_prob_numeric(const RingParams &ring, const CouplingConfig &config, double energy,
                                  const FlattopSpectrum &spectrum,
                                  const QuadratureOptions &options = {1e-7, 0.0, 10'000});
double pulsed_single_prob_numeric(const RingParams &ring, const CouplingConfig &config, double energy,
                                  const TabulatedSpectrum &spectrum,
                                  const QuadratureOptions &options = {1e-7, 0.0, 10'000});

// Closed form for flattop pumps, numeric singles for tabulated ones (pair
// probability then follows from p_si = gamma_mu p_s / gamma).
// Warns when p_s > 0.1 (perturbative regime strained).
PulsedObservables pulsed_observables(const RingParams &ring, const CouplingConfig &config, const PumpSpec &pump,
                                     Warnings *warnings = nullptr);

// Product-of-singles accidental coincidence probability per pulse.
inline double accidental_probability(const PulsedObservables &obs) { return obs.signal_prob * obs.idler_prob; }
} // namespace sfwm
