#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace comparo::cli {

/// Throws ConfigError unless `path` names a readable regular file.
void require_input_file(const std::string& path);
/// Throws ConfigError unless the directory that will hold `path` exists.
void require_output_location(const std::string& path);

std::string read_text_file(const std::string& path);
std::vector<std::uint8_t> read_binary_file(const std::string& path);

/// Non-empty lines with surrounding whitespace removed.
std::vector<std::string> read_lines(const std::string& path);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::string& path, std::string_view text);

}  // namespace comparo::cli
