#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "footcast/date.hpp"

namespace footcast {

/// One player's attribute vector for one team-year. Only attributes present
/// in the source row are stored, in the file's declared column order.
struct PlayerRecord {
  std::string player_id;
  std::string team;
  int year = 0;
  std::vector<std::pair<std::string, double>> attributes;

  /// Pointer to the value, or nullptr when the attribute is absent.
  const double* attribute(std::string_view name) const;
};

enum class MatchContext : std::uint8_t { world_cup, continental, friendly, other };
enum class MatchStage : std::uint8_t { group, knockout, unknown };

const char* to_string(MatchContext context);
const char* to_string(MatchStage stage);

/// One historical match. `winner` is the recorded post-shootout winner when
/// the source file carries one; empty otherwise.
struct MatchRecord {
  std::string match_id;
  Date date;
  std::string home_team;
  std::string away_team;
  int home_goals = 0;
  int away_goals = 0;
  int net_score = 0;
  MatchContext context = MatchContext::other;
  MatchStage stage = MatchStage::unknown;
  std::string winner;

  bool is_draw() const { return home_goals == away_goals; }
  int total_goals() const { return home_goals + away_goals; }
};

/// Year-specific aggregated feature vector for one national team. Feature
/// order matches the globally retained attribute list.
struct TeamProfile {
  std::string team;
  int year = 0;
  std::vector<double> features;
  int roster_size = 0;
};

using ProfileKey = std::pair<std::string, int>;
using ProfileMap = std::map<ProfileKey, TeamProfile>;

/// Team-name canonicalization via a `variant=canonical` table.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::map<std::string, std::string> entries)
      : entries_(std::move(entries)) {}

  static AliasTable from_file(const std::string& path);

  std::string canonical(std::string_view name) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace footcast
