#pragma once

#include <map>
#include <string>
#include <vector>

#include "footcast/records.hpp"

namespace footcast {

struct LoadReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<std::string> diagnostics;  // one row-indexed line per rejection
  std::vector<std::string> warnings;
};

/// Column mapping for the players file. Every unmapped column is treated as
/// an attribute column.
struct PlayerColumns {
  std::string player_id = "player_id";
  std::string team = "team";
  std::string year = "year";
};

struct PlayersLoadResult {
  std::vector<PlayerRecord> records;
  std::vector<std::string> attribute_names;  // declared column order
  LoadReport report;
};

/// Loads player rows. Rows with a bad year, an unparsable numeric cell, or a
/// duplicate (team, year, player_id) are rejected with a diagnostic; a
/// missing mandatory column is fatal.
PlayersLoadResult load_players(const std::string& path, const PlayerColumns& columns,
                               const AliasTable& aliases, int year_min, int year_max,
                               char delimiter);

/// Column mapping for the matches file. stage, winner, match_id and
/// net_score are optional in the source.
struct MatchColumns {
  std::string date = "date";
  std::string home_team = "home_team";
  std::string away_team = "away_team";
  std::string home_goals = "home_goals";
  std::string away_goals = "away_goals";
  std::string context = "context";
  std::string stage = "stage";
  std::string winner = "winner";
  std::string match_id = "match_id";
  std::string net_score = "net_score";
};

/// Configurable string -> MatchContext table. Lookups are case-insensitive
/// exact matches; unknown strings map to `other` with a warning.
class ContextTable {
 public:
  static ContextTable defaults();

  void add(std::string text, MatchContext context);
  MatchContext lookup(std::string_view text, bool& known) const;

 private:
  std::map<std::string, MatchContext> entries_;
};

struct MatchesLoadResult {
  std::vector<MatchRecord> records;
  LoadReport report;
};

MatchesLoadResult load_matches(const std::string& path, const MatchColumns& columns,
                               const ContextTable& contexts, const AliasTable& aliases,
                               char delimiter);

}  // namespace footcast
