#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ardlkit::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  // 1-based source line of each row

    // Throws Error(Parse) naming the file when the column is absent.
    std::size_t column(std::string_view name) const;
};

// Minimal RFC 4180 reader: header row, comma separator, optional double quotes.
Table read(const std::filesystem::path& path);
std::vector<std::string> split_line(std::string_view line);

// Shortest representation that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view text, bool& ok);

}  // namespace ardlkit::csv
