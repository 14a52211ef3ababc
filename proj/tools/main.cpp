#include "commands.hpp"

#include <sfwm/errors.hpp>
#include <sfwm/report.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

namespace
{
enum ExitCode
{
    kOk = 0,
    kValidation = 1,
    kComputation = 2,
    kIo = 3,
};

void add_common(CLI::App *cmd, sfwm::cli::Options &opt, bool config, bool grid)
{
    if (config)
    {
        cmd->add_option("--config", opt.config, "INI configuration file");
    }
    cmd->add_option("--out", opt.out, "output path (figures: file prefix)");
    cmd->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    if (grid)
    {
        cmd->add_option("--grid", opt.grid, "grid points per axis (schmidt: time samples)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--schmidt-points", opt.schmidt_points, "time samples for K")->check(CLI::PositiveNumber);
        cmd->add_flag("--refine", opt.refine, "refine grid maxima inside their neighbouring cells");
    }
}
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Photon-pair rates, wavepackets and optimal couplings for microring SFWM sources"};
    app.set_version_flag("--version", std::string(sfwm::library_version()));
    app.require_subcommand(1);

    sfwm::cli::Options opt;
    std::function<int(const sfwm::cli::Options &)> action;
    auto sub = [&](const char *name, const char *help, int (*fn)(const sfwm::cli::Options &), bool config, bool grid) {
        CLI::App *cmd = app.add_subcommand(name, help);
        add_common(cmd, opt, config, grid);
        cmd->callback([&action, fn] { action = fn; });
    };
    sub("rates", "rates or per-pulse probabilities at one coupling point", sfwm::cli::rates, true, false);
    sub("sweep", "coupling-grid sweep from the [sweep] section", sfwm::cli::sweep, true, true);
    sub("optimize", "all twelve optimal coupling conditions, normalized and in SI units", sfwm::cli::optimize, true,
        false);
    sub("schmidt", "Schmidt number of the configured pulsed source", sfwm::cli::schmidt, true, true);
    sub("validate", "re-derive every tabulated optimum numerically", sfwm::cli::validate, false, false);
    sub("figure2", "CW rate maps for the AlGaAs example (three panels)", sfwm::cli::figure2, false, true);
    sub("figure3", "pulsed probability and Schmidt maps for the AlGaAs example", sfwm::cli::figure3, false, true);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try
    {
        return action(opt);
    }
    catch (const sfwm::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    catch (const sfwm::ComputationError &e)
    {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kComputation;
    }
    catch (const sfwm::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
}
