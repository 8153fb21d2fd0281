#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spinon {

inline constexpr const char* tool_version = "1.0.0";

// %.17g: shortest text that always round-trips a double exactly.
std::string format_g17(double v);

std::string json_escape(const std::string& s);

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// '#'-prefixed metadata lines, a comma-separated header, then %.17g rows.
std::string render_csv(const Table& table);

// Writes to <path>.tmp and renames; readers never see partial files.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace spinon
