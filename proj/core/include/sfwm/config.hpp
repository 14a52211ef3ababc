#pragma once

#include "sfwm/model.hpp"
#include "sfwm/optimizer.hpp"
#include "sfwm/presets.hpp"
#include "sfwm/schmidt.hpp"
#include "sfwm/sweep.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfwm
{
// Device, pump and run settings read from an INI file. Physical quantities
// use unit-suffixed keys and are converted to SI (rad/s for rates) on load.
// Keys that are absent keep the AlGaAs example values.
struct AppConfig
{
    RingParams ring = algaas::ring();
    double gamma_c = algaas::gamma_c(); // rad/s

    PumpMode pump_mode = PumpMode::Cw;
    double power = algaas::kPower;              // W
    double energy = algaas::kPulseEnergy;       // J
    std::optional<double> bandwidth_factor;     // B; default 10 when no absolute bandwidth is given
    std::optional<double> delta_omega;          // rad/s
    std::optional<std::filesystem::path> spectrum_file;
    std::optional<double> repetition_rate;      // Hz
    double coincidence_window = 1e-9;           // s

    Geometry geometry = Geometry::AllPassIdentical;
    std::vector<double> couplings;              // gamma_c units, coupling_names order; empty = optimum
    std::optional<double> pump_loss_ratio;      // tgamma_c / gamma_c, distinct geometry only

    std::optional<SweepAxis> axis1;
    std::optional<SweepAxis> axis2;
    std::vector<SweepOutput> outputs;

    SchmidtGridOptions schmidt;

    PumpRegime regime() const { return pump_mode == PumpMode::Cw ? PumpRegime::Cw : PumpRegime::BroadbandPulse; }
    PumpSpec pump_spec() const;
    // Configured couplings, or the one-photon optimum of the geometry/regime when none are given.
    std::vector<double> effective_couplings() const;
    CouplingConfig coupling_config() const;
    // Requires a [sweep] section.
    SweepSpec sweep_spec() const;
};

// Relative spectrum_file paths resolve against base_dir.
AppConfig parse_config(std::string_view text, const std::filesystem::path &base_dir = {});
// IoError when the file cannot be read, ValidationError for bad contents.
AppConfig load_config(const std::filesystem::path &path);
} // namespace sfwm
