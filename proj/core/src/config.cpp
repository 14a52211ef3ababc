#include "sfwm/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sfwm
{
namespace
{
namespace pt = boost::property_tree;

const std::set<std::string> &known_keys(const std::string &section)
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"ring",
         {"wavelength_nm", "n2_m2_per_w", "group_velocity_m_per_s", "mode_area_um2", "radius_um", "circumference_um",
          "gamma_c_over_2pi_mhz", "gamma_c_over_2pi_hz"}},
        {"pump",
         {"mode", "power_uw", "power_mw", "pulse_energy_pj", "bandwidth_factor", "bandwidth_over_2pi_ghz",
          "spectrum_file", "repetition_rate_mhz"}},
        {"coupling",
         {"geometry", "gamma_a_over_gamma_c", "gamma_b_over_gamma_c", "tgamma_a_over_gamma_c",
          "pump_gamma_c_over_gamma_c"}},
        {"detection", {"coincidence_window_ns"}},
        {"sweep",
         {"outputs", "axis1", "axis1_min", "axis1_max", "axis1_points", "axis1_scale", "axis2", "axis2_min",
          "axis2_max", "axis2_points", "axis2_scale"}},
        {"schmidt", {"points", "t_max_over_gamma"}},
    };
    static const std::set<std::string> none;
    const auto it = keys.find(section);
    return it == keys.end() ? none : it->second;
}

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

class Section
{
public:
    Section(const pt::ptree *tree, std::string name) : tree_(tree), name_(std::move(name)) {}

    bool present() const { return tree_ != nullptr; }

    std::optional<std::string> text(const std::string &key) const
    {
        if (tree_ == nullptr)
        {
            return std::nullopt;
        }
        const auto v = tree_->get_optional<std::string>(key);
        if (!v)
        {
            return std::nullopt;
        }
        return trim(*v);
    }

    std::optional<double> number(const std::string &key) const
    {
        const auto t = text(key);
        if (!t)
        {
            return std::nullopt;
        }
        char *end = nullptr;
        const double v = std::strtod(t->c_str(), &end);
        if (t->empty() || end != t->c_str() + t->size() || !std::isfinite(v))
        {
            throw ValidationError("[" + name_ + "] " + key + ": '" + *t + "' is not a finite number");
        }
        return v;
    }

    std::optional<double> positive(const std::string &key) const
    {
        const auto v = number(key);
        if (v && !(*v > 0.0))
        {
            throw ValidationError("[" + name_ + "] " + key + " must be positive");
        }
        return v;
    }

    std::optional<int> integer(const std::string &key) const
    {
        const auto v = number(key);
        if (!v)
        {
            return std::nullopt;
        }
        if (std::floor(*v) != *v || std::abs(*v) > 1e9)
        {
            throw ValidationError("[" + name_ + "] " + key + " must be an integer");
        }
        return static_cast<int>(*v);
    }

    // At most one of the two alternative keys.
    void exclusive(const std::string &a, const std::string &b) const
    {
        if (text(a) && text(b))
        {
            throw ValidationError("[" + name_ + "] give either " + a + " or " + b + ", not both");
        }
    }

private:
    const pt::ptree *tree_;
    std::string name_;
};

std::optional<SweepAxis> read_axis(const Section &s, const std::string &prefix)
{
    const auto name = s.text(prefix);
    if (!name)
    {
        for (const char *suffix : {"_min", "_max", "_points", "_scale"})
        {
            if (s.text(prefix + suffix))
            {
                throw ValidationError("[sweep] " + prefix + suffix + " given without " + prefix);
            }
        }
        return std::nullopt;
    }
    SweepAxis axis;
    axis.name = *name;
    axis.min = s.number(prefix + "_min").value_or(0.05);
    axis.max = s.number(prefix + "_max").value_or(5.0);
    axis.points = s.integer(prefix + "_points").value_or(200);
    if (const auto scale = s.text(prefix + "_scale"))
    {
        axis.scale = parse_axis_scale(*scale);
    }
    return axis;
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> items;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        item = trim(item);
        if (!item.empty())
        {
            items.push_back(item);
        }
    }
    return items;
}
} // namespace

PumpSpec AppConfig::pump_spec() const
{
    if (pump_mode == PumpMode::Cw)
    {
        return PumpSpec::cw(power);
    }
    if (spectrum_file)
    {
        return PumpSpec::pulsed_tabulated(energy, TabulatedSpectrum::load(*spectrum_file).normalized());
    }
    if (delta_omega)
    {
        return PumpSpec::pulsed_with_bandwidth(energy, *delta_omega);
    }
    return PumpSpec::pulsed_with_factor(energy, bandwidth_factor.value_or(algaas::kBandwidthFactor));
}

std::vector<double> AppConfig::effective_couplings() const
{
    if (!couplings.empty())
    {
        return couplings;
    }
    return analytic_optimum(geometry, {Objective::OnePhoton, regime()}).couplings;
}

CouplingConfig AppConfig::coupling_config() const
{
    const auto x = effective_couplings();
    if (geometry == Geometry::AddDropDistinct && pump_loss_ratio)
    {
        return CouplingConfig::add_drop_distinct(x[0] * gamma_c, x[1] * gamma_c, gamma_c, *pump_loss_ratio * gamma_c);
    }
    return make_config(geometry, x, gamma_c);
}

SweepSpec AppConfig::sweep_spec() const
{
    if (!axis1)
    {
        throw ValidationError("config has no [sweep] section with axis1");
    }
    if (pump_loss_ratio && *pump_loss_ratio != 1.0)
    {
        throw ValidationError("sweeps assume tgamma_c = gamma_c; drop pump_gamma_c_over_gamma_c");
    }
    SweepSpec spec;
    spec.geometry = geometry;
    spec.regime = regime();
    spec.axis1 = *axis1;
    spec.axis2 = axis2;
    spec.outputs = outputs;
    spec.ring = ring;
    spec.pump = pump_spec();
    spec.gamma_c = gamma_c;
    spec.fixed_couplings = effective_couplings();
    spec.coincidence_window = coincidence_window;
    spec.schmidt = schmidt;
    return spec;
}

AppConfig parse_config(std::string_view text, const std::filesystem::path &base_dir)
{
    pt::ptree tree;
    try
    {
        std::istringstream in{std::string(text)};
        pt::ini_parser::read_ini(in, tree);
    }
    catch (const pt::ini_parser_error &e)
    {
        throw ValidationError(std::string("config: ") + e.what());
    }
    for (const auto &[section, body] : tree)
    {
        const auto &keys = known_keys(section);
        if (keys.empty())
        {
            throw ValidationError("config: unknown section [" + section + "]");
        }
        if (body.empty() && !body.data().empty())
        {
            throw ValidationError("config: key '" + section + "' must be inside a section");
        }
        for (const auto &[key, value] : body)
        {
            if (!keys.contains(key))
            {
                throw ValidationError("config: unknown key '" + key + "' in [" + section + "]");
            }
        }
    }
    auto section = [&](const std::string &name) {
        const auto child = tree.get_child_optional(name);
        return Section(child ? &*child : nullptr, name);
    };

    AppConfig cfg;

    const Section ring = section("ring");
    ring.exclusive("radius_um", "circumference_um");
    ring.exclusive("gamma_c_over_2pi_mhz", "gamma_c_over_2pi_hz");
    const double n2 = ring.positive("n2_m2_per_w").value_or(algaas::kN2);
    const double vg = ring.positive("group_velocity_m_per_s").value_or(algaas::kGroupVelocity);
    const double area = ring.positive("mode_area_um2").value_or(algaas::kModeArea * 1e12) * 1e-12;
    double circumference = kTwoPi * algaas::kRadius;
    if (const auto r = ring.positive("radius_um"))
    {
        circumference = kTwoPi * *r * 1e-6;
    }
    if (const auto l = ring.positive("circumference_um"))
    {
        circumference = *l * 1e-6;
    }
    const double wavelength = ring.positive("wavelength_nm").value_or(algaas::kWavelength * 1e9) * 1e-9;
    cfg.ring = RingParams::from_wavelength(n2, vg, area, circumference, wavelength);
    if (const auto g = ring.positive("gamma_c_over_2pi_mhz"))
    {
        cfg.gamma_c = kTwoPi * *g * 1e6;
    }
    if (const auto g = ring.positive("gamma_c_over_2pi_hz"))
    {
        cfg.gamma_c = kTwoPi * *g;
    }

    const Section pump = section("pump");
    pump.exclusive("power_uw", "power_mw");
    if (const auto mode = pump.text("mode"))
    {
        if (*mode == "cw")
        {
            cfg.pump_mode = PumpMode::Cw;
        }
        else if (*mode == "pulsed")
        {
            cfg.pump_mode = PumpMode::Pulsed;
        }
        else
        {
            throw ValidationError("[pump] mode must be cw or pulsed");
        }
    }
    if (const auto p = pump.positive("power_uw"))
    {
        cfg.power = *p * 1e-6;
    }
    if (const auto p = pump.positive("power_mw"))
    {
        cfg.power = *p * 1e-3;
    }
    if (const auto e = pump.positive("pulse_energy_pj"))
    {
        cfg.energy = *e * 1e-12;
    }
    const int bandwidth_keys = (pump.text("bandwidth_factor") ? 1 : 0) + (pump.text("bandwidth_over_2pi_ghz") ? 1 : 0) +
                               (pump.text("spectrum_file") ? 1 : 0);
    if (bandwidth_keys > 1)
    {
        throw ValidationError("[pump] give one of bandwidth_factor, bandwidth_over_2pi_ghz, spectrum_file");
    }
    cfg.bandwidth_factor = pump.positive("bandwidth_factor");
    if (const auto b = pump.positive("bandwidth_over_2pi_ghz"))
    {
        cfg.delta_omega = kTwoPi * *b * 1e9;
    }
    if (const auto f = pump.text("spectrum_file"))
    {
        std::filesystem::path p(*f);
        cfg.spectrum_file = p.is_relative() ? base_dir / p : p;
    }
    if (const auto r = pump.positive("repetition_rate_mhz"))
    {
        cfg.repetition_rate = *r * 1e6;
    }

    const Section coupling = section("coupling");
    if (const auto g = coupling.text("geometry"))
    {
        cfg.geometry = parse_geometry(*g);
    }
    {
        std::vector<double> x;
        int given = 0;
        for (const auto &name : coupling_names(cfg.geometry))
        {
            const auto v = coupling.positive(name + "_over_gamma_c");
            given += v ? 1 : 0;
            x.push_back(v.value_or(0.0));
        }
        for (const char *key : {"gamma_a_over_gamma_c", "gamma_b_over_gamma_c", "tgamma_a_over_gamma_c"})
        {
            const auto names = coupling_names(cfg.geometry);
            const std::string k(key);
            const std::string suffix = "_over_gamma_c";
            if (coupling.text(k) &&
                std::find(names.begin(), names.end(), k.substr(0, k.size() - suffix.size())) == names.end())
            {
                throw ValidationError("[coupling] " + k + " does not apply to geometry " +
                                      std::string(to_string(cfg.geometry)));
            }
        }
        if (given != 0 && given != static_cast<int>(x.size()))
        {
            throw ValidationError("[coupling] give every coupling of the geometry or none");
        }
        if (given != 0)
        {
            cfg.couplings = std::move(x);
        }
    }
    if (const auto r = coupling.positive("pump_gamma_c_over_gamma_c"))
    {
        if (cfg.geometry != Geometry::AddDropDistinct)
        {
            throw ValidationError("[coupling] pump_gamma_c_over_gamma_c applies only to add_drop_distinct");
        }
        cfg.pump_loss_ratio = *r;
    }

    if (const auto w = section("detection").positive("coincidence_window_ns"))
    {
        cfg.coincidence_window = *w * 1e-9;
    }

    const Section sweep = section("sweep");
    cfg.axis1 = read_axis(sweep, "axis1");
    cfg.axis2 = read_axis(sweep, "axis2");
    if (cfg.axis2 && !cfg.axis1)
    {
        throw ValidationError("[sweep] axis2 given without axis1");
    }
    if (const auto o = sweep.text("outputs"))
    {
        for (const auto &item : split_list(*o))
        {
            cfg.outputs.push_back(parse_sweep_output(item));
        }
    }

    const Section schmidt = section("schmidt");
    cfg.schmidt.points = schmidt.integer("points").value_or(cfg.schmidt.points);
    cfg.schmidt.t_max_over_gamma = schmidt.positive("t_max_over_gamma").value_or(cfg.schmidt.t_max_over_gamma);
    return cfg;
}

AppConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw IoError("cannot open config '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return parse_config(buffer.str(), path.parent_path());
    }
    catch (const ValidationError &e)
    {
        throw ValidationError(path.string() + ": " + e.what());
    }
}
} // namespace sfwm
