#include <sfwm/errors.hpp>
#include <sfwm/spectrum.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace sfwm;

TEST(Flattop, UnitNormAndSupport)
{
    const FlattopSpectrum s{4.0};
    EXPECT_DOUBLE_EQ(s(0.0).real(), 0.5);
    EXPECT_DOUBLE_EQ(s(1.99).real(), 0.5);
    EXPECT_DOUBLE_EQ(std::abs(s(2.01)), 0.0);
    EXPECT_DOUBLE_EQ(std::abs(s(-2.01)), 0.0);
    const double norm = oracle::gk([&](double w) { return std::norm(s(w)); }, s.lower(), s.upper());
    EXPECT_NEAR(norm, 1.0, 1e-13);
}

TEST(Tabulated, InterpolatesLinearlyAndVanishesOutside)
{
    const TabulatedSpectrum s({-1.0, 0.0, 2.0}, {{0.0, 0.0}, {2.0, 2.0}, {0.0, 0.0}});
    EXPECT_DOUBLE_EQ(s(-0.5).real(), 1.0);
    EXPECT_DOUBLE_EQ(s(-0.5).imag(), 1.0);
    EXPECT_DOUBLE_EQ(s(1.0).real(), 1.0);
    EXPECT_DOUBLE_EQ(std::abs(s(2.5)), 0.0);
    EXPECT_DOUBLE_EQ(std::abs(s(-1.5)), 0.0);
}

TEST(Tabulated, NormSquaredIsExactForTheInterpolant)
{
    const TabulatedSpectrum s({-1.0, 0.3, 2.0, 2.5}, {{0.1, -0.4}, {2.0, 1.0}, {-0.5, 0.7}, {0.3, 0.0}});
    const double oracle = oracle::gk([&](double w) { return std::norm(s(w)); }, -1.0, 0.3) +
                          oracle::gk([&](double w) { return std::norm(s(w)); }, 0.3, 2.0) +
                          oracle::gk([&](double w) { return std::norm(s(w)); }, 2.0, 2.5);
    EXPECT_NEAR(s.norm_squared(), oracle, 1e-13 * oracle);
    EXPECT_NEAR(s.normalized().norm_squared(), 1.0, 1e-14);
}

TEST(Tabulated, RejectsBadGrids)
{
    EXPECT_THROW(TabulatedSpectrum({0.0}, {{1.0, 0.0}}), ValidationError);
    EXPECT_THROW(TabulatedSpectrum({0.0, 1.0}, {{1.0, 0.0}}), ValidationError);
    EXPECT_THROW(TabulatedSpectrum({0.0, 0.0}, {{1.0, 0.0}, {1.0, 0.0}}), ValidationError);
    EXPECT_THROW(TabulatedSpectrum({1.0, 0.0}, {{1.0, 0.0}, {1.0, 0.0}}), ValidationError);
    EXPECT_THROW(TabulatedSpectrum({0.0, NAN}, {{1.0, 0.0}, {1.0, 0.0}}), ValidationError);
    EXPECT_THROW(TabulatedSpectrum({0.0, 1.0}, {{0.0, 0.0}, {0.0, 0.0}}).normalized(), ValidationError);
}

TEST(Tabulated, SaveLoadRoundTripIsBitExact)
{
    const auto path = std::filesystem::temp_directory_path() / "sfwm_spectrum_roundtrip.txt";
    const TabulatedSpectrum s({-1.0 / 3.0, 0.1, 2.0 / 7.0}, {{1.0 / 3.0, -1e-300}, {0.7, 0.2}, {std::sqrt(2.0), 0.0}});
    s.save(path);
    const auto back = TabulatedSpectrum::load(path);
    ASSERT_EQ(back.omega().size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
    {
        EXPECT_EQ(back.omega()[i], s.omega()[i]);
        EXPECT_EQ(back.amplitude()[i], s.amplitude()[i]);
    }
    std::filesystem::remove(path);
}

TEST(Tabulated, LoadErrors)
{
    EXPECT_THROW(TabulatedSpectrum::load("/nonexistent/dir/spectrum.txt"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "sfwm_spectrum_bad.txt";
    {
        std::ofstream out(path);
        out << "# omega re im\n0 1 0\n1 abc 0\n";
    }
    EXPECT_THROW(TabulatedSpectrum::load(path), ValidationError);
    std::filesystem::remove(path);
}

TEST(Tabulated, SampledFlattopIsNormalized)
{
    const auto s = sample_flattop(6.0, 101);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
    EXPECT_DOUBLE_EQ(s.lower(), -3.0);
    EXPECT_DOUBLE_EQ(s.upper(), 3.0);
    EXPECT_THROW(sample_flattop(0.0, 10), ValidationError);
    EXPECT_THROW(sample_flattop(1.0, 1), ValidationError);
}
