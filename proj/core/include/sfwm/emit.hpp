#pragma once

#include "sfwm/sweep.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sfwm
{
enum class OutputFormat
{
    Csv,
    Json,
};

OutputFormat parse_output_format(std::string_view text);

// CSV: one header row (axis names, outputs, error), numbers as %.17g, NaN for
// failed points, the error message quoted.
std::string to_csv(const SweepResult &result);
// {"meta": {...}, "rows": [{column: value, ..., "error": ""}]}; NaN -> null.
nlohmann::json to_json(const SweepResult &result);

std::string render(const SweepResult &result, OutputFormat format);

// Writes the rendered table; IoError with the path on failure.
void emit(const SweepResult &result, OutputFormat format, const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view contents);

struct ParsedTable
{
    std::vector<std::string> columns; // without the error column
    std::vector<std::vector<double>> values;
    std::vector<std::string> errors;
    nlohmann::json meta; // JSON input only
};

ParsedTable parse_csv(std::string_view text);
ParsedTable parse_json(const nlohmann::json &document);
ParsedTable read_table(const std::filesystem::path &path, OutputFormat format);
} // namespace sfwm
