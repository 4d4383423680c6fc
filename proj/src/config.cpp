#include "footcast/config.hpp"

#include <charconv>
#include <fstream>

#include "footcast/csv.hpp"
#include "footcast/errors.hpp"

namespace footcast {

namespace {

double parse_double(std::string_view key, const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("config key '" + std::string(key) + "': expected a number, got '" +
                      text + "'");
  }
  return value;
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    config.set(std::move(key), std::move(value));
  }
  return config;
}

void RunConfig::set(std::string key, std::string value) {
  values_[std::move(key)] = std::move(value);
}

bool RunConfig::has(std::string_view key) const {
  return values_.find(std::string(key)) != values_.end();
}

std::string RunConfig::get_string(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) {
    throw ConfigError("missing required config key '" + std::string(key) + "'");
  }
  return it->second;
}

std::string RunConfig::get_string(std::string_view key, std::string_view fallback) const {
  auto it = values_.find(std::string(key));
  return it == values_.end() ? std::string(fallback) : it->second;
}

double RunConfig::get_double(std::string_view key, double fallback) const {
  auto it = values_.find(std::string(key));
  return it == values_.end() ? fallback : parse_double(key, it->second);
}

long long RunConfig::get_int(std::string_view key, long long fallback) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return fallback;
  long long value = 0;
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("config key '" + std::string(key) + "': expected an integer, got '" +
                      text + "'");
  }
  return value;
}

bool RunConfig::get_bool(std::string_view key, bool fallback) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return fallback;
  const std::string& text = it->second;
  if (text == "true" || text == "on" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "off" || text == "0" || text == "no") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected a boolean, got '" +
                    text + "'");
}

std::vector<double> RunConfig::get_double_list(std::string_view key,
                                               const std::vector<double>& fallback) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  const std::string& text = it->second;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string cell = trim(text.substr(start, comma - start));
    if (!cell.empty()) out.push_back(parse_double(key, cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) {
    throw ConfigError("config key '" + std::string(key) + "': empty list");
  }
  return out;
}

std::vector<std::string> RunConfig::get_string_list(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return {};
  std::vector<std::string> out;
  const std::string& text = it->second;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string cell = trim(text.substr(start, comma - start));
    if (!cell.empty()) out.push_back(std::move(cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace footcast
