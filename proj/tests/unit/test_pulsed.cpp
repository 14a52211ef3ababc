#include <sfwm/presets.hpp>
#include <sfwm/pulsed.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace sfwm;

namespace
{
const RingParams kRing = algaas::ring();
const double kGc = algaas::gamma_c();
const double kE = algaas::kPulseEnergy;

// Exact finite-bandwidth flattop lineshape by partial fractions:
// 1/((h - i x)(h - i (S - x))) = [1/(h - i x) + 1/(h - i S + i x)] / (2h - i S).
std::complex<double> flattop_lineshape_exact(double tgamma, double delta, double s)
{
    using C = std::complex<double>;
    const double h = tgamma / 2.0;
    const double lo = std::max(-delta / 2.0, s - delta / 2.0);
    const double hi = std::min(delta / 2.0, s + delta / 2.0);
    if (!(hi > lo))
    {
        return {0.0, 0.0};
    }
    const C i(0.0, 1.0);
    auto antiderivative = [&](double x) { return i * std::log(C(h, -x)) - i * std::log(C(h, -s + x)); };
    return (antiderivative(hi) - antiderivative(lo)) / (delta * C(tgamma, -s));
}

double delta_for(const CouplingConfig &c, double factor = 10.0)
{
    return factor * c.pump_gamma();
}
} // namespace

TEST(PulsedProbabilities, PairSinglesIdentityOverRandomConfigs)
{
    oracle::ConfigGenerator gen(1234u, kGc);
    for (int n = 0; n < 2000; ++n)
    {
        const auto c = gen();
        const double d = delta_for(c);
        const double ps = pulsed_single_prob(kRing, c, kE, d);
        const double psi = pulsed_pair_prob(kRing, c, kE, d);
        EXPECT_NEAR(psi, c.output_gamma() / c.gamma() * ps, 1e-15 * ps);
    }
}

TEST(PulsedProbabilities, NormalizedTimesP0IsAbsolute)
{
    oracle::ConfigGenerator gen(55u, kGc);
    const double p0 = prob_scale_p0(kRing, kE, 10.0, kGc);
    for (int n = 0; n < 100; ++n)
    {
        const auto c = gen();
        if (c.pump().c != kGc)
        {
            continue;
        }
        const double d = delta_for(c);
        EXPECT_NEAR(pulsed_single_prob_normalized(c) * p0 / pulsed_single_prob(kRing, c, kE, d), 1.0, 1e-13);
        EXPECT_NEAR(pulsed_pair_prob_normalized(c) * p0 / pulsed_pair_prob(kRing, c, kE, d), 1.0, 1e-13);
        const double ta = c.pump().a;
        EXPECT_NEAR(pulsed_single_prob_normalized(c),
                    oracle::pulsed_singles_over_p0(ta, c.pump_gamma(), c.output_gamma(), c.gamma(), kGc),
                    1e-13 * pulsed_single_prob_normalized(c));
    }
}

TEST(PulsedWavepacket, SquaredIntegralEqualsPairProbability)
{
    oracle::ConfigGenerator gen(4321u, kGc);
    const double g_energy = oracle::kerr_coefficient(kRing) * kE;
    for (int n = 0; n < 110; ++n)
    {
        const auto c = gen();
        const double d = delta_for(c);
        const double integral = oracle::squared_norm_2d(
            [&](double ts, double ti) { return pulsed_wavepacket(kRing, c, kE, d, ts, ti); },
            std::min(c.gamma(), c.pump_gamma()));
        const double psi = pulsed_pair_prob(kRing, c, kE, d);
        EXPECT_NEAR(integral / psi, 1.0, 1e-5);
        // Library wavepacket against the formula typed in independently.
        const double ts = 0.7 / c.gamma();
        const double ti = 2.3 / c.gamma();
        const double ref = oracle::pulsed_wavepacket_oracle(c, g_energy, d, ts, ti);
        EXPECT_NEAR(pulsed_wavepacket(kRing, c, kE, d, ts, ti).real() / ref, 1.0, 1e-6);
    }
}

TEST(PulsedWavepacket, CausalSymmetricAndReal)
{
    oracle::ConfigGenerator gen(8u, kGc);
    std::uniform_real_distribution<double> t(-5.0, 20.0);
    for (int n = 0; n < 1000; ++n)
    {
        const auto c = gen();
        const double d = delta_for(c);
        const double ts = t(gen.rng()) / c.gamma();
        const double ti = t(gen.rng()) / c.gamma();
        const auto psi = pulsed_wavepacket(kRing, c, kE, d, ts, ti);
        EXPECT_EQ(psi.imag(), 0.0);
        EXPECT_EQ(psi, pulsed_wavepacket(kRing, c, kE, d, ti, ts));
        if (ts < 0.0 || ti < 0.0)
        {
            EXPECT_EQ(psi.real(), 0.0);
        }
        else
        {
            EXPECT_GE(psi.real(), 0.0);
        }
    }
}

TEST(PulsedWavepacket, DegenerateLimitIsContinuous)
{
    const double gamma = 3.0;
    for (double t : {0.1, 0.5, 2.0})
    {
        const double exact = pulsed_wavepacket_shape(gamma, gamma, t, 2.0 * t);
        for (double eps : {1e-8, 1e-7, 2e-6, 1e-5})
        {
            const double near = pulsed_wavepacket_shape(gamma * (1.0 + eps), gamma, t, 2.0 * t);
            // first-order correction is -(tgamma - gamma) m^2 / 2 relative to m
            EXPECT_NEAR(near / exact, 1.0, 2.0 * eps * gamma * t) << eps;
        }
    }
}

TEST(PulsedProbabilities, SinglesDoubleIntegralMatchesClosedForm)
{
    oracle::ConfigGenerator gen(2718u, kGc);
    const double g_energy = oracle::kerr_coefficient(kRing) * kE;
    for (int n = 0; n < 4; ++n)
    {
        const auto c = gen();
        const double d = delta_for(c);
        const double oracle = oracle::pulsed_singles_oracle(c, g_energy, d);
        EXPECT_NEAR(oracle / pulsed_single_prob(kRing, c, kE, d), 1.0, 1e-5);
    }
}

TEST(PulsedLineshape, BroadbandFormAndValidity)
{
    Warnings w;
    const auto f = flattop_lineshape_broadband(2.0, 40.0, 1.5, &w);
    EXPECT_TRUE(w.empty());
    EXPECT_NEAR(std::abs(f - (2.0 * oracle::kPi / 40.0) / std::complex<double>(2.0, -1.5)), 0.0, 1e-15);
    flattop_lineshape_broadband(2.0, 12.0, 0.0, &w);
    EXPECT_EQ(w.messages().size(), 1u);
    EXPECT_THROW(flattop_lineshape_broadband(2.0, 1.9, 0.0), ValidationError);
    EXPECT_THROW(pulsed_pair_prob(kRing, CouplingConfig::all_pass(kGc, kGc), kE, kGc), ValidationError);
    EXPECT_THROW(pulsed_single_prob(kRing, CouplingConfig::all_pass(kGc, kGc), 0.0, 100.0 * kGc), ValidationError);
}

TEST(PulsedLineshape, EffectiveLineshapeMatchesPartialFractions)
{
    const double tg = 3.0;
    for (double delta : {5.0, 30.0, 300.0})
    {
        for (double s : {0.0, 0.7, -4.0, 12.0, 2.0 * delta - 1.0, 3.0 * delta})
        {
            const auto numeric = effective_pump_lineshape(FlattopSpectrum{delta}, tg, s);
            const auto exact = flattop_lineshape_exact(tg, delta, s);
            EXPECT_NEAR(std::abs(numeric - exact), 0.0, 1e-8 * std::max(std::abs(exact), 1e-3 / delta))
                << delta << " " << s;
        }
    }
}

TEST(PulsedLineshape, ApproachesBroadbandLimit)
{
    const double tg = 1.0;
    double previous = 1.0;
    for (double factor : {10.0, 100.0, 1000.0})
    {
        const double delta = factor * tg;
        const auto exact = effective_pump_lineshape(FlattopSpectrum{delta}, tg, 0.3);
        const auto broad = flattop_lineshape_broadband(tg, delta, 0.3);
        const double rel = std::abs(exact - broad) / std::abs(broad);
        EXPECT_LT(rel, previous);
        EXPECT_LT(rel, 2.0 / factor);
        previous = rel;
    }
}

TEST(PulsedNumeric, FlattopConvergesToClosedForm)
{
    const auto c = CouplingConfig::add_drop_distinct(1.37 * kGc, 1.83 * kGc, kGc);
    const double closed_1000 = pulsed_single_prob(kRing, c, kE, 1000.0 * c.pump_gamma());
    const double numeric_1000 = pulsed_single_prob_numeric(kRing, c, kE, FlattopSpectrum{1000.0 * c.pump_gamma()});
    const double closed_10 = pulsed_single_prob(kRing, c, kE, 10.0 * c.pump_gamma());
    const double numeric_10 = pulsed_single_prob_numeric(kRing, c, kE, FlattopSpectrum{10.0 * c.pump_gamma()});
    const double err_1000 = std::abs(numeric_1000 / closed_1000 - 1.0);
    const double err_10 = std::abs(numeric_10 / closed_10 - 1.0);
    EXPECT_LT(err_1000, 5e-3);
    EXPECT_LT(err_1000, err_10);
    EXPECT_LT(err_10, 0.2);
}

TEST(PulsedNumeric, TabulatedFlattopMatchesAnalyticFlattop)
{
    const auto c = CouplingConfig::all_pass(1.5 * kGc, kGc);
    const double delta = 10.0 * c.pump_gamma();
    const double analytic = pulsed_single_prob_numeric(kRing, c, kE, FlattopSpectrum{delta});
    const double tabulated = pulsed_single_prob_numeric(kRing, c, kE, sample_flattop(delta, 41));
    EXPECT_NEAR(tabulated / analytic, 1.0, 1e-6);
}

TEST(PulsedObservables, ClosedFormTabulatedAndWarnings)
{
    const auto c = CouplingConfig::all_pass(1.5 * kGc, kGc);
    Warnings w;
    const auto obs = pulsed_observables(kRing, c, PumpSpec::pulsed_with_factor(kE, 10.0), &w);
    EXPECT_EQ(obs.method, PulsedMethod::BroadbandClosedForm);
    EXPECT_DOUBLE_EQ(obs.signal_prob, obs.idler_prob);
    // 1 pJ in the AlGaAs ring gives p_s ~ 0.23: strained perturbative regime.
    EXPECT_GT(obs.signal_prob, 0.1);
    EXPECT_FALSE(w.empty());

    const double delta = 10.0 * c.pump_gamma();
    const auto tab = pulsed_observables(kRing, c, PumpSpec::pulsed_tabulated(1e-14, sample_flattop(delta, 41)));
    EXPECT_EQ(tab.method, PulsedMethod::NumericQuadrature);
    EXPECT_NEAR(tab.pair_prob, c.output_gamma() / c.gamma() * tab.signal_prob, 1e-15 * tab.signal_prob);

    EXPECT_THROW(pulsed_observables(kRing, c, PumpSpec::cw(1e-3)), ValidationError);
    EXPECT_THROW(pulsed_observables(kRing, c, PumpSpec::pulsed_with_factor(kE, 0.5)), ValidationError);
}
