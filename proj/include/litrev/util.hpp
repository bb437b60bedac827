#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace litrev::util {

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// Collapses every run of whitespace (spaces, tabs, newlines) to one space
// and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);
std::vector<std::string> split_lines(std::string_view s);

std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Form-style percent encoding: unreserved chars kept, space becomes '+',
// everything else %XX.
std::string url_encode(std::string_view s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Fixed %.10g rendering so CSV outputs are byte-stable across runs.
std::string format_double(double v);

std::optional<int> parse_int(const std::string& s);
std::optional<double> parse_double(const std::string& s);

} // namespace litrev::util
