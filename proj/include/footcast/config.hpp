#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace footcast {

/// Flat key-value run configuration. Keys absent from the store fall back to
/// the defaults passed at each call site, so the stored map is exactly what
/// the user provided (file plus command-line overrides).
class RunConfig {
 public:
  RunConfig() = default;

  /// Parses `key = value` lines; '#' starts a comment, blank lines ignored.
  static RunConfig from_file(const std::string& path);

  void set(std::string key, std::string value);
  bool has(std::string_view key) const;

  std::string get_string(std::string_view key) const;  // throws ConfigError if absent
  std::string get_string(std::string_view key, std::string_view fallback) const;
  double get_double(std::string_view key, double fallback) const;
  long long get_int(std::string_view key, long long fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;
  std::vector<double> get_double_list(std::string_view key,
                                      const std::vector<double>& fallback) const;
  std::vector<std::string> get_string_list(std::string_view key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace footcast
