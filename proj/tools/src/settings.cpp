#include "settings.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace comparo::cli {
namespace {

constexpr std::array<std::string_view, 27> kKnownKeys = {
    "raw",         "patterns",   "aspects",       "products",  "lexicon", "suffixes",
    "output",      "corpus",     "embeddings",    "checkpoint", "loss_log", "filter",
    "variant",     "direction",  "num_layers",    "hidden_dim", "learning_rate",
    "epochs",      "clip_norm",  "seed",          "input",     "topology", "input_dim",
    "length",      "count",      "dim",           "embeddings_out",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

bool is_known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

void Settings::load_file_text(std::string_view text, const std::string& origin) {
  std::map<std::string, std::string, std::less<>> loaded;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::string where = origin + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    if (!is_known_key(key)) throw ConfigError(where + "unknown key '" + key + "'");
    if (!loaded.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      throw ConfigError(where + "duplicate key '" + key + "'");
    }
  }
  for (auto& [key, value] : loaded) values_[key] = std::move(value);
}

void Settings::set(const std::string& key, std::string value) {
  if (!is_known_key(key)) throw ConfigError("unknown setting '" + key + "'");
  values_[key] = std::move(value);
}

bool Settings::has(std::string_view key) const { return values_.find(key) != values_.end(); }

std::optional<std::string> Settings::find(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Settings::text(std::string_view key, std::string fallback) const {
  return find(key).value_or(std::move(fallback));
}

std::string Settings::required(std::string_view key) const {
  auto value = find(key);
  if (!value || value->empty()) {
    std::string flag(key);
    std::replace(flag.begin(), flag.end(), '_', '-');
    throw ConfigError("missing required setting '" + std::string(key) + "' (--" + flag + ")");
  }
  return *value;
}

std::uint64_t Settings::unsigned_value(std::string_view key, std::uint64_t fallback) const {
  const auto value = find(key);
  if (!value) return fallback;
  std::uint64_t out = 0;
  const char* last = value->data() + value->size();
  const auto [ptr, ec] = std::from_chars(value->data(), last, out);
  if (ec != std::errc{} || ptr != last || value->empty()) {
    throw ConfigError("setting '" + std::string(key) + "' expects a non-negative integer, got '" +
                      *value + "'");
  }
  return out;
}

double Settings::real(std::string_view key, double fallback) const {
  const auto value = find(key);
  if (!value) return fallback;
  double out = 0.0;
  const char* last = value->data() + value->size();
  const auto [ptr, ec] = std::from_chars(value->data(), last, out);
  if (ec != std::errc{} || ptr != last || value->empty() || !std::isfinite(out)) {
    throw ConfigError("setting '" + std::string(key) + "' expects a number, got '" + *value + "'");
  }
  return out;
}

bool Settings::boolean(std::string_view key, bool fallback) const {
  const auto value = find(key);
  if (!value) return fallback;
  if (*value == "true" || *value == "1" || *value == "yes" || *value == "on") return true;
  if (*value == "false" || *value == "0" || *value == "no" || *value == "off") return false;
  throw ConfigError("setting '" + std::string(key) + "' expects true or false, got '" + *value +
                    "'");
}

}  // namespace comparo::cli
