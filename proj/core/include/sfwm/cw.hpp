#pragma once

#include "sfwm/model.hpp"

#include <complex>
#include <optional>

namespace sfwm
{
struct CwObservables
{
    double signal_rate = 0.0; // R_s, 1/s
    double idler_rate = 0.0;  // R_i, 1/s (equal to R_s)
    double pair_rate = 0.0;   // R_si, 1/s
    double heralding_efficiency = 0.0; // R_si / R_i = gamma_mu / gamma
};

// R_s = R_i = 32 tgamma_a^2 gamma_mu / (tgamma^4 gamma^2) (n2 vg^2 omega0 P / c S L)^2
double cw_single_rate(const RingParams &ring, const CouplingConfig &config, double power);

// R_si = 32 tgamma_a^2 gamma_mu^2 / (tgamma^4 gamma^3) (n2 vg^2 omega0 P / c S L)^2
double cw_pair_rate(const RingParams &ring, const CouplingConfig &config, double power);

// Biphoton amplitude versus tau = t_s - t_i (1/s). Real and positive; the
// global unimodular phase is fixed to +1.
std::complex<double> cw_wavepacket(const RingParams &ring, const CouplingConfig &config, double power, double tau);

CwObservables cw_observables(const RingParams &ring, const CouplingConfig &config, double power);

// Coupling-dependent intracavity pump buildup at detuning Omega, normalized by
// gamma_c: 4 gamma_c tgamma_a / (tgamma^2 + 4 Omega^2). Equal to 1 at
// on-resonance critical coupling of an otherwise lossless-bus ring.
double cw_pump_buildup(const CouplingConfig &config, double detuning);

struct Accidentals
{
    double rate = 0.0;         // R_acc = T_R R_s R_i
    std::optional<double> car; // R_si / R_acc; empty when R_s == 0
};

Accidentals cw_accidentals_and_car(const RingParams &ring, const CouplingConfig &config, double power,
                                   double coincidence_window);

// Rates in units of R0 (gamma_c is the biphoton loss rate). Used by the optimizer.
double cw_single_rate_normalized(const CouplingConfig &config);
double cw_pair_rate_normalized(const CouplingConfig &config);
} // namespace sfwm
