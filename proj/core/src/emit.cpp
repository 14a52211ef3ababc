#include "sfwm/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace sfwm
{
namespace
{
std::string format_number(double v)
{
    if (std::isnan(v))
    {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quote(std::string_view text)
{
    std::string out = "\"";
    for (char c : text)
    {
        if (c == '"')
        {
            out += '"';
        }
        out += (c == '\n' || c == '\r') ? ' ' : c;
    }
    return out + "\"";
}

// Splits one CSV line; fields may be double-quoted with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        const char c = line[i];
        if (quoted)
        {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
            {
                field += '"';
                ++i;
            }
            else if (c == '"')
            {
                quoted = false;
            }
            else
            {
                field += c;
            }
        }
        else if (c == '"')
        {
            quoted = true;
        }
        else if (c == ',')
        {
            fields.push_back(std::move(field));
            field.clear();
        }
        else
        {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

double parse_number(const std::string &text)
{
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
    {
        throw ValidationError("malformed number '" + text + "' in table");
    }
    return v;
}

std::vector<double> row_numbers(const SweepRow &row)
{
    std::vector<double> v = row.coordinates;
    v.insert(v.end(), row.values.begin(), row.values.end());
    return v;
}
} // namespace

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "csv")
    {
        return OutputFormat::Csv;
    }
    if (text == "json")
    {
        return OutputFormat::Json;
    }
    throw ValidationError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string to_csv(const SweepResult &result)
{
    std::string out;
    for (const auto &name : result.column_names())
    {
        out += name + ",";
    }
    out += "error\n";
    for (const auto &row : result.rows)
    {
        for (double v : row_numbers(row))
        {
            out += format_number(v) + ",";
        }
        out += row.error.empty() ? std::string() : quote(row.error);
        out += "\n";
    }
    return out;
}

nlohmann::json to_json(const SweepResult &result)
{
    const auto names = result.column_names();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : result.rows)
    {
        nlohmann::json r = nlohmann::json::object();
        const auto numbers = row_numbers(row);
        for (std::size_t k = 0; k < names.size(); ++k)
        {
            r[names[k]] = std::isfinite(numbers[k]) ? nlohmann::json(numbers[k]) : nlohmann::json(nullptr);
        }
        r["error"] = row.error;
        rows.push_back(std::move(r));
    }
    return {{"meta", result.meta}, {"rows", std::move(rows)}};
}

std::string render(const SweepResult &result, OutputFormat format)
{
    return format == OutputFormat::Csv ? to_csv(result) : to_json(result).dump(2) + "\n";
}

void write_text_file(const std::filesystem::path &path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
    {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out)
    {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void emit(const SweepResult &result, OutputFormat format, const std::filesystem::path &path)
{
    write_text_file(path, render(result, format));
}

ParsedTable parse_csv(std::string_view text)
{
    ParsedTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
    {
        throw ValidationError("CSV table is empty");
    }
    table.columns = split_csv_line(line);
    if (table.columns.empty() || table.columns.back() != "error")
    {
        throw ValidationError("CSV header must end with an error column");
    }
    table.columns.pop_back();
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != table.columns.size() + 1)
        {
            throw ValidationError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(table.columns.size() + 1));
        }
        std::vector<double> values;
        for (std::size_t k = 0; k < table.columns.size(); ++k)
        {
            values.push_back(parse_number(fields[k]));
        }
        table.values.push_back(std::move(values));
        table.errors.push_back(std::move(fields.back()));
    }
    return table;
}

ParsedTable parse_json(const nlohmann::json &document)
{
    ParsedTable table;
    table.meta = document.at("meta");
    table.columns = table.meta.at("columns").get<std::vector<std::string>>();
    for (const auto &row : document.at("rows"))
    {
        std::vector<double> values;
        for (const auto &name : table.columns)
        {
            const auto &v = row.at(name);
            values.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
        }
        table.values.push_back(std::move(values));
        table.errors.push_back(row.value("error", std::string()));
    }
    return table;
}

ParsedTable read_table(const std::filesystem::path &path, OutputFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (format == OutputFormat::Csv)
    {
        return parse_csv(buffer.str());
    }
    try
    {
        return parse_json(nlohmann::json::parse(buffer.str()));
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError("'" + path.string() + "': " + e.what());
    }
}
} // namespace sfwm
