#pragma once

#include "sfwm/model.hpp"
#include "sfwm/optimizer.hpp"
#include "sfwm/presets.hpp"
#include "sfwm/schmidt.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfwm
{
enum class AxisScale
{
    Linear,
    Log,
};

// One swept coupling, in units of gamma_c. The name must be one of
// coupling_names(geometry).
struct SweepAxis
{
    std::string name;
    double min = 0.05;
    double max = 5.0;
    int points = 200;
    AxisScale scale = AxisScale::Linear;

    std::vector<double> values() const;
};

enum class SweepOutput
{
    Rs,
    Rsi,
    Ps,
    Psi,
    K,
    Car,
};

std::string_view to_string(SweepOutput output);
std::string_view to_string(AxisScale scale);
SweepOutput parse_sweep_output(std::string_view text);
AxisScale parse_axis_scale(std::string_view text);

struct SweepSpec
{
    Geometry geometry = Geometry::AllPassIdentical;
    PumpRegime regime = PumpRegime::Cw;
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::vector<SweepOutput> outputs;
    RingParams ring = algaas::ring();
    PumpSpec pump = PumpSpec::cw(algaas::kPower);
    double gamma_c = algaas::gamma_c(); // rad/s
    // Couplings not covered by an axis, gamma_c units, ordered as
    // coupling_names(geometry). Empty means 1.0 for every coupling.
    std::vector<double> fixed_couplings;
    double coincidence_window = 1e-9; // s, for CAR
    SchmidtGridOptions schmidt;

    // Throws ValidationError on any invariant violation.
    void validate() const;
};

struct SweepRow
{
    std::vector<double> coordinates; // axis1[, axis2]
    std::vector<double> values;      // one per output; NaN where the point failed
    std::string error;
};

struct GridMaximum
{
    std::vector<double> couplings; // full coupling vector, gamma_c units
    double value = 0.0;
};

struct SweepResult
{
    SweepSpec spec;
    std::vector<SweepRow> rows;
    nlohmann::json meta;

    std::vector<std::string> column_names() const; // axis names, outputs
};

// Evaluates every output at every grid point. Rows are ordered axis2-major
// (axis1 varies fastest) regardless of thread count. With refine, each rate
// or probability column is locally maximized inside the grid cells around its
// grid maximum and the result is recorded in meta["refined_maxima"].
SweepResult run_sweep(const SweepSpec &spec, int threads = 0, bool refine = false);

// Values of the requested outputs at one coupling point (gamma_c units).
std::vector<double> evaluate_outputs(const SweepSpec &spec, std::span<const double> couplings);

// The canned AlGaAs specs behind figure2 and figure3, one per
// geometry (panels a, b, c). Axes span [0.05, 5] gamma_c.
std::vector<SweepSpec> figure2_specs(int points = 200);
std::vector<SweepSpec> figure3_specs(int points = 101, int schmidt_points = 128);

nlohmann::json spec_to_json(const SweepSpec &spec);
} // namespace sfwm
