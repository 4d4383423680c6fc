#include "footcast/loaders.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "footcast/csv.hpp"
#include "footcast/errors.hpp"

namespace footcast {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool parse_int(std::string_view text, int& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_double(std::string_view text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::size_t require_column(const DelimitedTable& table, const std::string& name,
                           const std::string& path) {
  auto idx = table.column(name);
  if (!idx) throw DataError("missing column '" + name + "' in " + path);
  return *idx;
}

std::string row_diag(std::size_t data_row, const std::string& what) {
  // +2: header line plus 1-based counting, so the number matches the file.
  std::ostringstream os;
  os << "row " << (data_row + 2) << ": " << what;
  return os.str();
}

}  // namespace

PlayersLoadResult load_players(const std::string& path, const PlayerColumns& columns,
                               const AliasTable& aliases, int year_min, int year_max,
                               char delimiter) {
  const DelimitedTable table = read_delimited(path, delimiter);
  const std::size_t id_col = require_column(table, columns.player_id, path);
  const std::size_t team_col = require_column(table, columns.team, path);
  const std::size_t year_col = require_column(table, columns.year, path);

  PlayersLoadResult result;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == id_col || c == team_col || c == year_col) continue;
    result.attribute_names.push_back(table.header[c]);
  }

  std::set<std::tuple<std::string, int, std::string>> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, "cell count mismatch"));
      continue;
    }
    int year = 0;
    if (!parse_int(row[year_col], year)) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, "bad year '" + row[year_col] + "'"));
      continue;
    }
    if (year < year_min || year > year_max) {
      result.report.rejected++;
      std::ostringstream os;
      os << "year " << year << " outside [" << year_min << ", " << year_max << "]";
      result.report.diagnostics.push_back(row_diag(r, os.str()));
      continue;
    }
    PlayerRecord record;
    record.player_id = row[id_col];
    record.team = aliases.canonical(row[team_col]);
    record.year = year;
    if (record.player_id.empty() || record.team.empty()) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, "empty player id or team"));
      continue;
    }
    auto key = std::make_tuple(record.team, record.year, record.player_id);
    if (!seen.insert(key).second) {
      result.report.rejected++;
      result.report.diagnostics.push_back(
          row_diag(r, "duplicate player '" + record.player_id + "' for " + record.team));
      continue;
    }
    bool bad_cell = false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == id_col || c == team_col || c == year_col) continue;
      if (row[c].empty()) continue;  // absent attribute, not an error
      double value = 0.0;
      if (!parse_double(row[c], value)) {
        result.report.rejected++;
        result.report.diagnostics.push_back(
            row_diag(r, "bad numeric cell '" + row[c] + "' in column '" + table.header[c] + "'"));
        bad_cell = true;
        break;
      }
      record.attributes.emplace_back(table.header[c], value);
    }
    if (bad_cell) continue;
    result.records.push_back(std::move(record));
    result.report.accepted++;
  }
  return result;
}

ContextTable ContextTable::defaults() {
  ContextTable table;
  table.add("world cup", MatchContext::world_cup);
  table.add("world_cup", MatchContext::world_cup);
  table.add("fifa world cup", MatchContext::world_cup);
  table.add("world cup qualification", MatchContext::world_cup);
  table.add("continental", MatchContext::continental);
  table.add("uefa euro", MatchContext::continental);
  table.add("copa america", MatchContext::continental);
  table.add("copa américa", MatchContext::continental);
  table.add("african cup of nations", MatchContext::continental);
  table.add("afc asian cup", MatchContext::continental);
  table.add("gold cup", MatchContext::continental);
  table.add("friendly", MatchContext::friendly);
  table.add("other", MatchContext::other);
  return table;
}

void ContextTable::add(std::string text, MatchContext context) {
  entries_[lower(text)] = context;
}

MatchContext ContextTable::lookup(std::string_view text, bool& known) const {
  auto it = entries_.find(lower(text));
  if (it == entries_.end()) {
    known = false;
    return MatchContext::other;
  }
  known = true;
  return it->second;
}

MatchesLoadResult load_matches(const std::string& path, const MatchColumns& columns,
                               const ContextTable& contexts, const AliasTable& aliases,
                               char delimiter) {
  const DelimitedTable table = read_delimited(path, delimiter);
  const std::size_t date_col = require_column(table, columns.date, path);
  const std::size_t home_col = require_column(table, columns.home_team, path);
  const std::size_t away_col = require_column(table, columns.away_team, path);
  const std::size_t hg_col = require_column(table, columns.home_goals, path);
  const std::size_t ag_col = require_column(table, columns.away_goals, path);
  const std::size_t ctx_col = require_column(table, columns.context, path);
  const auto stage_col = table.column(columns.stage);
  const auto winner_col = table.column(columns.winner);
  const auto id_col = table.column(columns.match_id);

  MatchesLoadResult result;
  std::set<std::string> unknown_contexts;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, "cell count mismatch"));
      continue;
    }
    MatchRecord record;
    try {
      record.date = parse_date(row[date_col]);
    } catch (const DataError& err) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, err.what()));
      continue;
    }
    record.home_team = aliases.canonical(row[home_col]);
    record.away_team = aliases.canonical(row[away_col]);
    if (record.home_team.empty() || record.away_team.empty()) {
      result.report.rejected++;
      result.report.diagnostics.push_back(row_diag(r, "empty team name"));
      continue;
    }
    if (record.home_team == record.away_team) {
      result.report.rejected++;
      result.report.diagnostics.push_back(
          row_diag(r, "team playing itself: " + record.home_team));
      continue;
    }
    if (!parse_int(row[hg_col], record.home_goals) ||
        !parse_int(row[ag_col], record.away_goals) || record.home_goals < 0 ||
        record.away_goals < 0) {
      result.report.rejected++;
      result.report.diagnostics.push_back(
          row_diag(r, "bad goals '" + row[hg_col] + "'/'" + row[ag_col] + "'"));
      continue;
    }
    record.net_score = record.home_goals - record.away_goals;

    bool known = false;
    record.context = contexts.lookup(row[ctx_col], known);
    if (!known) unknown_contexts.insert(row[ctx_col]);

    if (stage_col && !row[*stage_col].empty()) {
      const std::string stage = lower(row[*stage_col]);
      if (stage == "group") {
        record.stage = MatchStage::group;
      } else if (stage == "knockout") {
        record.stage = MatchStage::knockout;
      } else {
        record.stage = MatchStage::unknown;
      }
    }
    if (winner_col && !row[*winner_col].empty()) {
      record.winner = aliases.canonical(row[*winner_col]);
      if (record.winner != record.home_team && record.winner != record.away_team) {
        result.report.rejected++;
        result.report.diagnostics.push_back(
            row_diag(r, "winner '" + record.winner + "' is not a participant"));
        continue;
      }
    }
    if (id_col && !row[*id_col].empty()) {
      record.match_id = row[*id_col];
    } else {
      std::ostringstream os;
      os << to_string(record.date) << ':' << record.home_team << ':' << record.away_team;
      record.match_id = os.str();
    }

    result.records.push_back(std::move(record));
    result.report.accepted++;
  }
  for (const auto& text : unknown_contexts) {
    result.report.warnings.push_back("unknown context '" + text + "' mapped to other");
  }
  return result;
}

}  // namespace footcast
