#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

namespace sfwm
{
// Rectangular pump spectrum of full width delta_omega (rad/s), unit L2 norm:
// A(Omega) = 1/sqrt(delta_omega) for |Omega| < delta_omega/2.
struct FlattopSpectrum
{
    double delta_omega = 0.0;

    std::complex<double> operator()(double omega) const;
    double lower() const { return -0.5 * delta_omega; }
    double upper() const { return 0.5 * delta_omega; }
};

// Sampled complex pump amplitude A(Omega) on a strictly increasing grid of
// offsets from the carrier (rad/s). Linearly interpolated between samples and
// zero outside [front, back]. Normalization is not required here; PumpSpec
// enforces it when a tabulated spectrum drives a pulsed pump.
class TabulatedSpectrum
{
public:
    TabulatedSpectrum(std::vector<double> omega, std::vector<std::complex<double>> amplitude);

    // Same samples rescaled to unit norm. Throws ValidationError for a zero spectrum.
    TabulatedSpectrum normalized() const;

    // Three numeric columns per line: Omega, Re A, Im A. Lines starting with '#' are skipped.
    static TabulatedSpectrum load(const std::filesystem::path &path);
    void save(const std::filesystem::path &path) const;

    std::complex<double> operator()(double omega) const;

    // Exact integral of |A|^2 for the piecewise-linear interpolant.
    double norm_squared() const;

    std::span<const double> omega() const { return omega_; }
    std::span<const std::complex<double>> amplitude() const { return amplitude_; }
    double lower() const { return omega_.front(); }
    double upper() const { return omega_.back(); }

private:
    std::vector<double> omega_;
    std::vector<std::complex<double>> amplitude_;
};

// Flattop of width delta_omega sampled on `points` nodes spanning it, then normalized.
TabulatedSpectrum sample_flattop(double delta_omega, int points);
} // namespace sfwm
