#include <sfwm/cw.hpp>
#include <sfwm/presets.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace sfwm;

namespace
{
const RingParams kRing = algaas::ring();
const double kGc = algaas::gamma_c();
} // namespace

TEST(CwRates, PairSinglesIdentityOverRandomConfigs)
{
    oracle::ConfigGenerator gen(20240611u, kGc);
    for (int n = 0; n < 2000; ++n)
    {
        const auto c = gen();
        const double rs = cw_single_rate(kRing, c, algaas::kPower);
        const double rsi = cw_pair_rate(kRing, c, algaas::kPower);
        EXPECT_NEAR(rsi, c.output_gamma() / c.gamma() * rs, 1e-15 * rs);
    }
}

TEST(CwRates, MatchDirectFormula)
{
    oracle::ConfigGenerator gen(7u, kGc);
    const double gp = oracle::kerr_coefficient(kRing) * algaas::kPower;
    for (int n = 0; n < 200; ++n)
    {
        const auto c = gen();
        const double ta = c.pump().a;
        const double tg = c.pump_gamma();
        const double g = c.gamma();
        const double mu = c.output_gamma();
        const double rs = 32.0 * ta * ta * mu / (std::pow(tg, 4) * g * g) * gp * gp;
        EXPECT_NEAR(cw_single_rate(kRing, c, algaas::kPower) / rs, 1.0, 1e-13);
        EXPECT_NEAR(cw_single_rate_normalized(c),
                    oracle::cw_singles_over_r0(ta, tg, mu, g, c.biphoton().c), 1e-13 * cw_single_rate_normalized(c));
        EXPECT_NEAR(cw_pair_rate_normalized(c), oracle::cw_pairs_over_r0(ta, tg, mu, g, c.biphoton().c),
                    1e-13 * cw_pair_rate_normalized(c));
    }
}

TEST(CwRates, NormalizedTimesR0IsAbsolute)
{
    const auto c = CouplingConfig::add_drop_identical(0.4 * kGc, 1.7 * kGc, kGc);
    const double r0 = rate_scale_R0(kRing, algaas::kPower, kGc);
    EXPECT_NEAR(cw_single_rate_normalized(c) * r0 / cw_single_rate(kRing, c, algaas::kPower), 1.0, 1e-13);
    EXPECT_NEAR(cw_pair_rate_normalized(c) * r0 / cw_pair_rate(kRing, c, algaas::kPower), 1.0, 1e-13);
}

TEST(CwRates, AllPassCriticalCouplingIsHalfR0)
{
    const auto c = CouplingConfig::all_pass(kGc, kGc);
    const double r0 = rate_scale_R0(kRing, algaas::kPower, kGc);
    EXPECT_NEAR(cw_single_rate(kRing, c, algaas::kPower) / r0, 0.5, 1e-14);
    EXPECT_NEAR(cw_single_rate(kRing, c, algaas::kPower) / 3.81e6, 1.0, 0.01);
}

TEST(CwRates, ScaleWithPowerSquared)
{
    const auto c = CouplingConfig::add_drop_distinct(1.3 * kGc, 0.8 * kGc, kGc);
    EXPECT_NEAR(cw_single_rate(kRing, c, 3e-5) / cw_single_rate(kRing, c, 1e-5), 9.0, 1e-12);
    EXPECT_THROW(cw_single_rate(kRing, c, 0.0), ValidationError);
    EXPECT_THROW(cw_pair_rate(kRing, c, -1.0), ValidationError);
}

TEST(CwWavepacket, SquaredIntegralEqualsPairRate)
{
    oracle::ConfigGenerator gen(99u, kGc);
    for (int n = 0; n < 120; ++n)
    {
        const auto c = gen();
        // integrate in u = gamma tau so Boost sees an O(1) scale
        auto density = [&](double u) { return std::norm(cw_wavepacket(kRing, c, algaas::kPower, u / c.gamma())); };
        const double integral = oracle::gk_real_line(density, {0.0}) / c.gamma();
        EXPECT_NEAR(integral / cw_pair_rate(kRing, c, algaas::kPower), 1.0, 1e-9);
    }
}

TEST(CwWavepacket, RealPositiveSymmetricAndMatchesOracle)
{
    const auto c = CouplingConfig::add_drop_distinct(2.0 * kGc, 0.6 * kGc, kGc);
    const double gp = oracle::kerr_coefficient(kRing) * algaas::kPower;
    for (double tau : {0.0, 1e-10, 3e-9, 2e-8})
    {
        const auto psi = cw_wavepacket(kRing, c, algaas::kPower, tau);
        EXPECT_EQ(psi.imag(), 0.0);
        EXPECT_GT(psi.real(), 0.0);
        EXPECT_EQ(psi, cw_wavepacket(kRing, c, algaas::kPower, -tau));
        EXPECT_NEAR(psi.real() / oracle::cw_wavepacket_oracle(c, gp, tau), 1.0, 1e-13);
    }
}

TEST(CwBuildup, UnityAtCriticalCouplingAndLorentzianInDetuning)
{
    EXPECT_NEAR(cw_pump_buildup(CouplingConfig::all_pass(kGc, kGc), 0.0), 1.0, 1e-15);
    EXPECT_NEAR(cw_pump_buildup(CouplingConfig::add_drop_distinct(kGc, 5.0 * kGc, kGc), 0.0), 1.0, 1e-15);
    // Off critical coupling the on-resonance buildup drops.
    EXPECT_LT(cw_pump_buildup(CouplingConfig::all_pass(3.0 * kGc, kGc), 0.0), 1.0);
    EXPECT_LT(cw_pump_buildup(CouplingConfig::all_pass(0.3 * kGc, kGc), 0.0), 1.0);
    const auto c = CouplingConfig::all_pass(kGc, kGc);
    // Half maximum at |Omega| = tgamma / 2.
    EXPECT_NEAR(cw_pump_buildup(c, c.pump_gamma() / 2.0), 0.5, 1e-15);
    EXPECT_NEAR(cw_pump_buildup(c, -c.pump_gamma() / 2.0), 0.5, 1e-15);
}

TEST(CwAccidentals, ProductOfSinglesAndCar)
{
    const auto c = CouplingConfig::all_pass(kGc, kGc);
    const auto obs = cw_observables(kRing, c, algaas::kPower);
    const auto acc = cw_accidentals_and_car(kRing, c, algaas::kPower, 1e-9);
    EXPECT_NEAR(acc.rate, 1e-9 * obs.signal_rate * obs.idler_rate, 1e-12 * acc.rate);
    ASSERT_TRUE(acc.car.has_value());
    EXPECT_NEAR(*acc.car, obs.pair_rate / acc.rate, 1e-12 * *acc.car);
    // CAR = (gamma_mu/gamma) / (T_R R_s) falls as the window grows.
    EXPECT_NEAR(cw_accidentals_and_car(kRing, c, algaas::kPower, 2e-9).car.value(), *acc.car / 2.0, 1e-9 * *acc.car);
    EXPECT_THROW(cw_accidentals_and_car(kRing, c, algaas::kPower, 0.0), ValidationError);
    EXPECT_THROW(cw_accidentals_and_car(kRing, c, algaas::kPower, std::numeric_limits<double>::infinity()),
                 ValidationError);
}

TEST(CwObservables, HeraldingEfficiency)
{
    const auto c = CouplingConfig::add_drop_identical(kGc, 2.0 * kGc, kGc);
    const auto obs = cw_observables(kRing, c, algaas::kPower);
    EXPECT_DOUBLE_EQ(obs.signal_rate, obs.idler_rate);
    EXPECT_NEAR(obs.heralding_efficiency, 0.5, 1e-15);
    EXPECT_NEAR(obs.pair_rate / obs.idler_rate, obs.heralding_efficiency, 1e-15);
}
