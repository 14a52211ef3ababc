#pragma once

// Test-side reference implementations. They use Boost.Math quadrature and
// formulas typed in directly, so they share no numerics with the library.

#include <sfwm/model.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace sfwm::oracle
{
inline constexpr double kPi = std::numbers::pi;

template <class F> double gk(F f, double a, double b, double tol = 1e-12)
{
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol, &err);
}

// Integral over the real line split at the given (sorted) points.
template <class F> double gk_real_line(F f, std::vector<double> cuts, double tol = 1e-12)
{
    const double inf = std::numeric_limits<double>::infinity();
    double sum = gk(f, -inf, cuts.front(), tol);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    {
        sum += gk(f, cuts[k], cuts[k + 1], tol);
    }
    return sum + gk(f, cuts.back(), inf, tol);
}

inline double kerr_coefficient(double n2, double vg, double omega0, double area, double length)
{
    return n2 * vg * vg * omega0 / (299'792'458.0 * area * length);
}

inline double kerr_coefficient(const RingParams &ring)
{
    return kerr_coefficient(ring.n2(), ring.group_velocity(), ring.omega0(), ring.mode_area(), ring.circumference());
}

// Random valid configuration with couplings log-uniform in [0.05, 10] gamma_c.
class ConfigGenerator
{
public:
    explicit ConfigGenerator(unsigned seed, double gamma_c = 1.0) : rng_(seed), gamma_c_(gamma_c) {}

    double coupling() { return gamma_c_ * std::exp(log_dist_(rng_)); }

    CouplingConfig operator()()
    {
        switch (pick_(rng_))
        {
        case 0:
            return CouplingConfig::all_pass(coupling(), gamma_c_);
        case 1:
            return CouplingConfig::add_drop_identical(coupling(), coupling(), gamma_c_);
        case 2:
            return CouplingConfig::add_drop_distinct(coupling(), coupling(), gamma_c_);
        default:
            // distinct coupling with a different pump loss
            return CouplingConfig::add_drop_distinct(coupling(), coupling(), gamma_c_,
                                                     gamma_c_ * std::exp(loss_dist_(rng_)));
        }
    }

    std::mt19937 &rng() { return rng_; }

private:
    std::mt19937 rng_;
    double gamma_c_;
    std::uniform_real_distribution<double> log_dist_{std::log(0.05), std::log(10.0)};
    std::uniform_real_distribution<double> loss_dist_{std::log(0.5), std::log(2.0)};
    std::uniform_int_distribution<int> pick_{0, 3};
};

// CW wavepacket straight from the closed form, tau = t_s - t_i.
inline double cw_wavepacket_oracle(const CouplingConfig &c, double g_power, double tau)
{
    const double tg = c.pump_gamma();
    const double gamma = c.gamma();
    return 4.0 * c.pump().a * c.output_gamma() / (tg * tg * gamma) * g_power * std::exp(-gamma * std::abs(tau) / 2.0);
}

// Integral of |psi(ts, ti)|^2 over [0, span/rate]^2, done in u = rate t with
// the diagonal kink as a breakpoint.
template <class Psi> double squared_norm_2d(Psi psi, double rate, double span = 40.0, double tol = 1e-11)
{
    auto inner = [&](double u) {
        auto f = [&](double v) { return std::norm(psi(u / rate, v / rate)); };
        return gk(f, 0.0, u, tol) + gk(f, u, span, tol);
    };
    return gk(inner, 0.0, span, tol) / (rate * rate);
}

// Nested 2D quadrature of the singles integral over the whole plane. The
// substitution w = (gamma/2) tan(theta) absorbs both signal and idler
// Lorentzians, leaving a bounded integrand on a square with one ridge at
// theta_i = -theta_s.
inline double pulsed_singles_oracle(const CouplingConfig &c, double g_energy, double delta_omega, double tol = 1e-11)
{
    const double tg = c.pump_gamma();
    const double gamma = c.gamma();
    const double h = gamma / 2.0;
    const double edge = kPi / 2.0;
    auto inner = [&](double ts) {
        auto f = [&](double ti) {
            const double s = h * (std::tan(ts) + std::tan(ti));
            return 1.0 / (tg * tg + s * s);
        };
        return gk(f, -edge, -ts, tol) + gk(f, -ts, edge, tol);
    };
    const double integral = gk(inner, -edge, 0.0, tol) + gk(inner, 0.0, edge, tol);
    const double fp_scale = (2.0 * kPi / delta_omega) * (2.0 * kPi / delta_omega);
    return c.pump().a * c.pump().a * c.output_gamma() * gamma / (4.0 * kPi * kPi) * g_energy * g_energy * fp_scale *
           integral / (h * h);
}

// Closed-form pulsed wavepacket typed in from the formula (no degenerate branch).
inline double pulsed_wavepacket_oracle(const CouplingConfig &c, double g_energy, double delta_omega, double ts,
                                       double ti)
{
    if (ts < 0.0 || ti < 0.0)
    {
        return 0.0;
    }
    const double tg = c.pump_gamma();
    const double gamma = c.gamma();
    const double d = tg - gamma;
    const double m = std::min(ts, ti);
    const double shape = std::abs(d) < 1e-9 * gamma ? m : -std::expm1(-d * m) / d;
    return c.pump().a * c.output_gamma() * 2.0 * kPi * g_energy / delta_omega * std::exp(-gamma * (ts + ti) / 2.0) *
           shape;
}

// Direct rational evaluations of the normalized rates, used to cross-check the table.
inline double cw_singles_over_r0(double ta, double tg, double mu, double g, double gc)
{
    return 32.0 * ta * ta * mu / (std::pow(tg, 4) * g * g) * gc * gc * gc;
}

inline double cw_pairs_over_r0(double ta, double tg, double mu, double g, double gc)
{
    return 32.0 * ta * ta * mu * mu / (std::pow(tg, 4) * g * g * g) * gc * gc * gc;
}

inline double pulsed_singles_over_p0(double ta, double tg, double mu, double g, double gc)
{
    return ta * ta * mu * gc * gc / (tg * tg * tg * g * (tg + g));
}

inline double pulsed_pairs_over_p0(double ta, double tg, double mu, double g, double gc)
{
    return ta * ta * mu * mu * gc * gc / (tg * tg * tg * g * g * (tg + g));
}
} // namespace sfwm::oracle
