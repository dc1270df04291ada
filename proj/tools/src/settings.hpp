#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace comparo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitData = 3,
  kExitCheckFailed = 4,
};

/// Bad configuration, including missing input paths.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input files that exist but cannot be used: parse errors, bad checkpoints.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every key a config file may set. Flags use the same names with '-'
/// in place of '_'.
bool is_known_key(std::string_view key);

/// Merged `key=value` settings. File values are loaded first; flag values
/// set afterwards override them.
class Settings {
 public:
  /// Blank lines and lines starting with '#' are skipped. Malformed lines and
  /// unknown or repeated keys throw ConfigError naming `origin` and the line.
  void load_file_text(std::string_view text, const std::string& origin);
  void set(const std::string& key, std::string value);

  bool has(std::string_view key) const;
  std::optional<std::string> find(std::string_view key) const;
  std::string text(std::string_view key, std::string fallback) const;
  /// Throws ConfigError when the key is unset.
  std::string required(std::string_view key) const;
  std::uint64_t unsigned_value(std::string_view key, std::uint64_t fallback) const;
  double real(std::string_view key, double fallback) const;
  bool boolean(std::string_view key, bool fallback) const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace comparo::cli
