#pragma once

#include "sfwm/model.hpp"

// AlGaAs microring used for the worked examples and the figure sweeps.
namespace sfwm::algaas
{
inline constexpr double kN2 = 2.6e-17;           // m^2/W
inline constexpr double kGroupVelocity = 8.57e7; // m/s
inline constexpr double kModeArea = 0.330e-12;   // m^2
inline constexpr double kRadius = 143e-6;        // m, L = 2 pi r
inline constexpr double kWavelength = 1550e-9;   // m
inline constexpr double kGammaCOver2Pi = 71.1e6; // Hz
inline constexpr double kPower = 10e-6;          // W
inline constexpr double kPulseEnergy = 1e-12;    // J
inline constexpr double kBandwidthFactor = 10.0;

inline RingParams ring()
{
    return RingParams::from_wavelength(kN2, kGroupVelocity, kModeArea, kTwoPi * kRadius, kWavelength);
}

inline double gamma_c() { return kTwoPi * kGammaCOver2Pi; }
} // namespace sfwm::algaas
