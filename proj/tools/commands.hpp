#pragma once

#include <optional>
#include <string>

namespace sfwm::cli
{
struct Options
{
    std::optional<std::string> config;
    std::optional<std::string> out;
    std::optional<std::string> format; // csv | json; unset means the command default
    int threads = 0;                   // 0 = hardware concurrency
    std::optional<int> grid;
    std::optional<int> schmidt_points;
    bool refine = false;
};

// Each command writes to --out (or stdout) and returns the process exit code.
int rates(const Options &opt);
int sweep(const Options &opt);
int optimize(const Options &opt);
int schmidt(const Options &opt);
int validate(const Options &opt);
int figure2(const Options &opt);
int figure3(const Options &opt);
} // namespace sfwm::cli
