#pragma once

#include "sfwm/errors.hpp"
#include "sfwm/spectrum.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace sfwm
{
inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s, exact
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Geometry
{
    AllPassIdentical,
    AddDropIdentical,
    AddDropDistinct,
};

enum class OutputPort
{
    A,
    B,
};

std::string_view to_string(Geometry geometry);
std::string_view to_string(OutputPort port);
// Accepts all_pass, add_drop_identical, add_drop_distinct (and the enum spellings).
Geometry parse_geometry(std::string_view text);

// Material and geometry constants of the ring. All SI units; omega0 in rad/s.
class RingParams
{
public:
    RingParams(double n2, double group_velocity, double mode_area, double circumference, double omega0);

    // omega0 = 2 pi c / wavelength.
    static RingParams from_wavelength(double n2, double group_velocity, double mode_area, double circumference,
                                      double wavelength);

    double n2() const { return n2_; }
    double group_velocity() const { return group_velocity_; }
    double mode_area() const { return mode_area_; }
    double circumference() const { return circumference_; }
    double omega0() const { return omega0_; }
    double wavelength() const { return kTwoPi * kSpeedOfLight / omega0_; }

    // n2 vg^2 omega0 / (c S L), in 1/(J s). Multiplying by power gives the
    // coupling-independent rate amplitude shared by every CW formula.
    double nonlinear_coefficient() const;

    // Free spectral range v_g / L in Hz.
    double free_spectral_range() const { return group_velocity_ / circumference_; }

private:
    double n2_;
    double group_velocity_;
    double mode_area_;
    double circumference_;
    double omega0_;
};

// Coupling (a: bus, b: drop) and loss (c) rates for one field, rad/s.
struct CouplingRates
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double total() const { return a + b + c; }
};

// Biphoton rates (gamma_nu) and pump rates (tgamma_nu) for one of the three
// supported ring configurations. Invariants are checked at construction.
class CouplingConfig
{
public:
    CouplingConfig(Geometry geometry, CouplingRates biphoton, CouplingRates pump, OutputPort port);

    static CouplingConfig all_pass(double gamma_a, double gamma_c);
    static CouplingConfig add_drop_identical(double gamma_a, double gamma_b, double gamma_c);
    // Pump couples only to the bus (tgamma_a), biphotons only to the drop (gamma_b).
    // The pump loss defaults to the biphoton loss.
    static CouplingConfig add_drop_distinct(double pump_gamma_a, double gamma_b, double gamma_c,
                                            std::optional<double> pump_gamma_c = std::nullopt);

    Geometry geometry() const { return geometry_; }
    OutputPort output_port() const { return port_; }
    const CouplingRates &biphoton() const { return biphoton_; }
    const CouplingRates &pump() const { return pump_; }

    double gamma() const { return biphoton_.total(); }
    double pump_gamma() const { return pump_.total(); }
    // gamma_mu: biphoton coupling into the collection port.
    double output_gamma() const { return port_ == OutputPort::A ? biphoton_.a : biphoton_.b; }
    double heralding_efficiency() const { return output_gamma() / gamma(); }

private:
    Geometry geometry_;
    CouplingRates biphoton_;
    CouplingRates pump_;
    OutputPort port_;
};

struct Linewidths
{
    double gamma = 0.0;
    double pump_gamma = 0.0;
};

struct QualityFactors
{
    double intrinsic = 0.0; // Qc = omega0 / gamma_c
    double loaded = 0.0;    // Q = omega0 / gamma
};

Linewidths total_linewidths(const CouplingConfig &config);
QualityFactors quality_factors(const RingParams &ring, const CouplingConfig &config);

// R0 = (n2 vg^2 omega0 P / c S L)^2 / gamma_c^3, in 1/s.
double rate_scale_R0(const RingParams &ring, double power, double gamma_c);

// p0 = (2 pi n2 vg^2 omega0 E / (c S L B gamma_c))^2. Warns when B < 10.
double prob_scale_p0(const RingParams &ring, double energy, double bandwidth_factor, double gamma_c,
                     Warnings *warnings = nullptr);

enum class PumpMode
{
    Cw,
    Pulsed,
};

enum class BandwidthMode
{
    AbsoluteDeltaOmega,
    BandwidthFactor, // DeltaOmega = B * tgamma
};

enum class SpectrumKind
{
    FlattopAnalytic,
    Tabulated,
};

class PumpSpec
{
public:
    static PumpSpec cw(double power);
    static PumpSpec pulsed_with_factor(double energy, double bandwidth_factor);
    static PumpSpec pulsed_with_bandwidth(double energy, double delta_omega);
    // Spectrum must have unit norm to relative 1e-9. The bandwidth is taken as
    // the width of the tabulated support.
    static PumpSpec pulsed_tabulated(double energy, TabulatedSpectrum spectrum);

    PumpMode mode() const { return mode_; }
    bool is_cw() const { return mode_ == PumpMode::Cw; }
    double power() const;
    double energy() const;
    BandwidthMode bandwidth_mode() const { return bandwidth_mode_; }
    double bandwidth_value() const { return bandwidth_; }
    SpectrumKind spectrum_kind() const { return tabulated_ ? SpectrumKind::Tabulated : SpectrumKind::FlattopAnalytic; }
    const std::optional<TabulatedSpectrum> &tabulated() const { return tabulated_; }

    // Pump bandwidth DeltaOmega in rad/s for a ring with total pump linewidth pump_gamma.
    double delta_omega(double pump_gamma) const;

private:
    PumpSpec() = default;

    PumpMode mode_ = PumpMode::Cw;
    double power_ = 0.0;
    double energy_ = 0.0;
    BandwidthMode bandwidth_mode_ = BandwidthMode::BandwidthFactor;
    double bandwidth_ = 0.0;
    std::optional<TabulatedSpectrum> tabulated_;
};

inline constexpr double kSpectrumNormTolerance = 1e-9;
} // namespace sfwm
