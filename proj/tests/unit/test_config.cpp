#include <sfwm/config.hpp>
#include <sfwm/spectrum.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>
#include <string>

using namespace sfwm;

namespace
{
const std::filesystem::path kData = SFWM_TEST_DATA_DIR;
constexpr double kPi = std::numbers::pi;
} // namespace

TEST(Config, EmptyTextGivesAlGaAsDefaults)
{
    const auto c = parse_config("");
    EXPECT_EQ(c.pump_mode, PumpMode::Cw);
    EXPECT_DOUBLE_EQ(c.power, 10e-6);
    EXPECT_NEAR(c.gamma_c, 2.0 * kPi * 71.1e6, 1e-3);
    EXPECT_NEAR(c.ring.circumference(), 2.0 * kPi * 143e-6, 1e-18);
    EXPECT_EQ(c.geometry, Geometry::AllPassIdentical);
    EXPECT_TRUE(c.couplings.empty());
    EXPECT_EQ(c.effective_couplings(), std::vector<double>{1.0});
}

TEST(Config, FileWithUnitConversions)
{
    const auto c = load_config(kData / "algaas_cw.ini");
    EXPECT_NEAR(c.ring.wavelength(), 1550e-9, 1e-20);
    EXPECT_DOUBLE_EQ(c.ring.n2(), 2.6e-17);
    EXPECT_DOUBLE_EQ(c.ring.mode_area(), 0.330e-12);
    EXPECT_DOUBLE_EQ(c.coincidence_window, 1e-9);
    EXPECT_EQ(c.couplings, std::vector<double>{1.0});
    EXPECT_DOUBLE_EQ(c.coupling_config().gamma(), 2.0 * c.gamma_c);

    const auto alt = parse_config("[ring]\ncircumference_um = 1000\ngamma_c_over_2pi_hz = 5e7\n"
                                  "[pump]\npower_mw = 2\n");
    EXPECT_NEAR(alt.ring.circumference(), 1e-3, 1e-18);
    EXPECT_NEAR(alt.gamma_c, 2.0 * kPi * 5e7, 1e-6);
    EXPECT_DOUBLE_EQ(alt.power, 2e-3);
}

TEST(Config, PulsedSweepSection)
{
    const auto c = load_config(kData / "algaas_pulsed_sweep.ini");
    EXPECT_EQ(c.regime(), PumpRegime::BroadbandPulse);
    EXPECT_DOUBLE_EQ(c.energy, 1e-12);
    EXPECT_DOUBLE_EQ(*c.repetition_rate, 1e8);
    const auto s = c.sweep_spec();
    EXPECT_EQ(s.axis1.name, "tgamma_a");
    EXPECT_EQ(s.axis2->scale, AxisScale::Log);
    EXPECT_EQ(s.axis2->points, 5);
    EXPECT_EQ(s.outputs, (std::vector<SweepOutput>{SweepOutput::Ps, SweepOutput::Psi, SweepOutput::K}));
    EXPECT_EQ(s.schmidt.points, 64);
    EXPECT_NO_THROW(s.validate());
    EXPECT_DOUBLE_EQ(s.pump.delta_omega(3.0), 30.0);
    // No couplings given: the one-photon pulsed optimum fills the fixed couplings.
    EXPECT_NEAR(s.fixed_couplings[0], 1.37, 1e-12);
}

TEST(Config, BandwidthAndSpectrumFile)
{
    const auto abs = parse_config("[pump]\nmode = pulsed\nbandwidth_over_2pi_ghz = 2\n");
    EXPECT_NEAR(*abs.delta_omega, 2.0 * kPi * 2e9, 1e-3);
    EXPECT_EQ(abs.pump_spec().bandwidth_mode(), BandwidthMode::AbsoluteDeltaOmega);

    const auto dir = std::filesystem::temp_directory_path() / "sfwm_config_test";
    std::filesystem::create_directories(dir);
    // unnormalized on disk; normalized on load
    TabulatedSpectrum({-1e10, 0.0, 1e10}, {{1.0, 0.0}, {3.0, 0.0}, {1.0, 0.0}}).save(dir / "spec.txt");
    const auto tab = parse_config("[pump]\nmode = pulsed\nspectrum_file = spec.txt\n", dir);
    EXPECT_EQ(*tab.spectrum_file, dir / "spec.txt");
    EXPECT_NEAR(tab.pump_spec().tabulated()->norm_squared(), 1.0, 1e-14);
    std::filesystem::remove_all(dir);
}

TEST(Config, Errors)
{
    EXPECT_THROW(load_config(kData / "missing.ini"), IoError);
    try
    {
        load_config(kData / "unknown_key.ini");
        FAIL() << "expected ValidationError";
    }
    catch (const ValidationError &e)
    {
        const std::string what = e.what();
        EXPECT_NE(what.find("unknown_key.ini"), std::string::npos);
        EXPECT_NE(what.find("finesse"), std::string::npos);
    }
    EXPECT_THROW(parse_config("[rings]\nradius_um = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[ring]\nradius_um = 143\ncircumference_um = 900\n"), ValidationError);
    EXPECT_THROW(parse_config("[pump]\npower_uw = 1\npower_mw = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[pump]\nbandwidth_factor = 10\nbandwidth_over_2pi_ghz = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[pump]\nmode = qcw\n"), ValidationError);
    EXPECT_THROW(parse_config("[pump]\npower_uw = -3\n"), ValidationError);
    EXPECT_THROW(parse_config("[pump]\npower_uw = ten\n"), ValidationError);
    EXPECT_THROW(parse_config("[coupling]\ngeometry = add_drop_identical\ngamma_a_over_gamma_c = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[coupling]\ngamma_b_over_gamma_c = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[coupling]\npump_gamma_c_over_gamma_c = 2\n"), ValidationError);
    EXPECT_THROW(parse_config("[sweep]\naxis1_min = 1\n"), ValidationError);
    EXPECT_THROW(parse_config("[sweep]\noutputs = Rs, g2\n"), ValidationError);
    EXPECT_THROW(parse_config("[schmidt]\npoints = 12.5\n"), ValidationError);
    EXPECT_THROW(parse_config("").sweep_spec(), ValidationError);
}

TEST(Config, DistinctPumpLoss)
{
    const auto c = parse_config("[coupling]\ngeometry = add_drop_distinct\ntgamma_a_over_gamma_c = 1\n"
                                "gamma_b_over_gamma_c = 2\npump_gamma_c_over_gamma_c = 0.5\n");
    const auto cc = c.coupling_config();
    EXPECT_DOUBLE_EQ(cc.pump_gamma(), 1.5 * c.gamma_c);
    EXPECT_DOUBLE_EQ(cc.gamma(), 3.0 * c.gamma_c);
}
