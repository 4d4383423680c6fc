#include "footcast/records.hpp"

#include <fstream>

#include "footcast/csv.hpp"
#include "footcast/errors.hpp"

namespace footcast {

const double* PlayerRecord::attribute(std::string_view name) const {
  for (const auto& [attr, value] : attributes) {
    if (attr == name) return &value;
  }
  return nullptr;
}

const char* to_string(MatchContext context) {
  switch (context) {
    case MatchContext::world_cup: return "world_cup";
    case MatchContext::continental: return "continental";
    case MatchContext::friendly: return "friendly";
    case MatchContext::other: return "other";
  }
  return "other";
}

const char* to_string(MatchStage stage) {
  switch (stage) {
    case MatchStage::group: return "group";
    case MatchStage::knockout: return "knockout";
    case MatchStage::unknown: return "unknown";
  }
  return "unknown";
}

AliasTable AliasTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open alias file: " + path);
  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw DataError("alias line missing '=': '" + trimmed + "'");
    }
    const std::string variant = trim(trimmed.substr(0, eq));
    const std::string canonical = trim(trimmed.substr(eq + 1));
    if (variant.empty() || canonical.empty()) {
      throw DataError("alias line with empty side: '" + trimmed + "'");
    }
    entries[variant] = canonical;
  }
  return AliasTable(std::move(entries));
}

std::string AliasTable::canonical(std::string_view name) const {
  auto it = entries_.find(std::string(name));
  return it == entries_.end() ? std::string(name) : it->second;
}

}  // namespace footcast
