#include "sfwm/spectrum.hpp"

#include "sfwm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace sfwm
{
std::complex<double> FlattopSpectrum::operator()(double omega) const
{
    if (std::abs(omega) < 0.5 * delta_omega)
    {
        return {1.0 / std::sqrt(delta_omega), 0.0};
    }
    return {0.0, 0.0};
}

TabulatedSpectrum::TabulatedSpectrum(std::vector<double> omega, std::vector<std::complex<double>> amplitude)
    : omega_(std::move(omega)), amplitude_(std::move(amplitude))
{
    if (omega_.size() != amplitude_.size())
    {
        throw ValidationError("TabulatedSpectrum: frequency and amplitude columns differ in length");
    }
    if (omega_.size() < 2)
    {
        throw ValidationError("TabulatedSpectrum: at least two samples required");
    }
    for (std::size_t i = 0; i < omega_.size(); ++i)
    {
        if (!std::isfinite(omega_[i]) || !std::isfinite(amplitude_[i].real()) || !std::isfinite(amplitude_[i].imag()))
        {
            throw ValidationError("TabulatedSpectrum: non-finite sample at row " + std::to_string(i));
        }
        if (i > 0 && !(omega_[i] > omega_[i - 1]))
        {
            throw ValidationError("TabulatedSpectrum: frequency grid must be strictly increasing (row " +
                                  std::to_string(i) + ")");
        }
    }
}

TabulatedSpectrum TabulatedSpectrum::normalized() const
{
    const double norm2 = norm_squared();
    if (!(norm2 > 0.0))
    {
        throw ValidationError("TabulatedSpectrum: cannot normalize a zero spectrum");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<std::complex<double>> scaled(amplitude_);
    for (auto &a : scaled)
    {
        a *= scale;
    }
    return {omega_, std::move(scaled)};
}

std::complex<double> TabulatedSpectrum::operator()(double omega) const
{
    if (omega < omega_.front() || omega > omega_.back())
    {
        return {0.0, 0.0};
    }
    auto upper = std::upper_bound(omega_.begin(), omega_.end(), omega);
    if (upper == omega_.end())
    {
        return amplitude_.back();
    }
    const auto j = static_cast<std::size_t>(upper - omega_.begin());
    const auto i = j - 1;
    const double s = (omega - omega_[i]) / (omega_[j] - omega_[i]);
    return amplitude_[i] + s * (amplitude_[j] - amplitude_[i]);
}

double TabulatedSpectrum::norm_squared() const
{
    // For a linear segment from p to q: h * (|p|^2 + Re(p conj q) + |q|^2) / 3.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < omega_.size(); ++i)
    {
        const auto p = amplitude_[i];
        const auto q = amplitude_[i + 1];
        const double h = omega_[i + 1] - omega_[i];
        sum += h * (std::norm(p) + (p * std::conj(q)).real() + std::norm(q)) / 3.0;
    }
    return sum;
}

TabulatedSpectrum TabulatedSpectrum::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw IoError("cannot open spectrum file '" + path.string() + "'");
    }
    std::vector<double> omega;
    std::vector<std::complex<double>> amplitude;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line))
    {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
        {
            continue;
        }
        std::istringstream fields(line);
        double w = 0.0;
        double re = 0.0;
        double im = 0.0;
        if (!(fields >> w >> re >> im))
        {
            throw ValidationError("spectrum file '" + path.string() + "' line " + std::to_string(line_number) +
                                  ": expected three numeric columns (omega, Re A, Im A)");
        }
        omega.push_back(w);
        amplitude.emplace_back(re, im);
    }
    if (in.bad())
    {
        throw IoError("read failure on spectrum file '" + path.string() + "'");
    }
    return {std::move(omega), std::move(amplitude)};
}

void TabulatedSpectrum::save(const std::filesystem::path &path) const
{
    std::ofstream out(path);
    if (!out)
    {
        throw IoError("cannot open spectrum file '" + path.string() + "' for writing");
    }
    out << "# omega_rad_per_s re_amplitude im_amplitude\n";
    char buffer[96];
    for (std::size_t i = 0; i < omega_.size(); ++i)
    {
        std::snprintf(buffer, sizeof buffer, "%.17g %.17g %.17g\n", omega_[i], amplitude_[i].real(),
                      amplitude_[i].imag());
        out << buffer;
    }
    if (!out)
    {
        throw IoError("write failure on spectrum file '" + path.string() + "'");
    }
}

TabulatedSpectrum sample_flattop(double delta_omega, int points)
{
    if (!(delta_omega > 0.0) || points < 2)
    {
        throw ValidationError("sample_flattop: need delta_omega > 0 and at least two points");
    }
    std::vector<double> omega(static_cast<std::size_t>(points));
    std::vector<std::complex<double>> amplitude(omega.size(), {1.0, 0.0});
    for (int i = 0; i < points; ++i)
    {
        omega[static_cast<std::size_t>(i)] = -0.5 * delta_omega + delta_omega * i / (points - 1);
    }
    return TabulatedSpectrum(std::move(omega), std::move(amplitude)).normalized();
}
} // namespace sfwm
