#include "footcast/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "footcast/errors.hpp"

namespace footcast {

namespace {

bool passes(const MatchRecord& match, const Date* cutoff,
            const std::optional<MatchContext>& filter) {
  if (cutoff && !(match.date < *cutoff)) return false;
  if (filter && match.context != *filter) return false;
  return true;
}

}  // namespace

HeadToHead head_to_head(std::span<const MatchRecord> history, const std::string& x,
                        const std::string& y, const Date& cutoff,
                        std::optional<MatchContext> context_filter) {
  HeadToHead record;
  record.team_x = x;
  record.team_y = y;
  for (const MatchRecord& match : history) {
    if (!passes(match, &cutoff, context_filter)) continue;
    const bool forward = match.home_team == x && match.away_team == y;
    const bool reverse = match.home_team == y && match.away_team == x;
    if (!forward && !reverse) continue;
    record.matches_played++;
    if (match.is_draw()) {
      record.draws++;
      continue;
    }
    const std::string& winner =
        match.home_goals > match.away_goals ? match.home_team : match.away_team;
    (winner == x ? record.wins_x : record.wins_y)++;
  }
  return record;
}

int compute_match_threshold(std::span<const MatchRecord> history,
                            std::optional<MatchContext> context_filter) {
  std::map<std::pair<std::string, std::string>, int> counts;
  for (const MatchRecord& match : history) {
    if (!passes(match, nullptr, context_filter)) continue;
    auto key = std::minmax(match.home_team, match.away_team);
    counts[{key.first, key.second}]++;
  }
  if (counts.empty()) throw DataError("no matches to derive the meeting threshold from");

  std::vector<int> values;
  values.reserve(counts.size());
  for (const auto& [pair, count] : counts) values.push_back(count);
  std::sort(values.begin(), values.end());
  // 75th percentile as 0-based rank ceil(0.75 n), clamped to the top.
  std::size_t index = static_cast<std::size_t>(
      std::ceil(0.75 * static_cast<double>(values.size())));
  if (index >= values.size()) index = values.size() - 1;
  return values[index];
}

double wwr(const WwrInputs& inputs) {
  if (inputs.v < 0) throw std::invalid_argument("match count cannot be negative");
  const double total = static_cast<double>(inputs.v + inputs.m);
  if (!(total > 0.0)) throw std::invalid_argument("v + m must be positive");
  return (static_cast<double>(inputs.v) / total) * inputs.win_ratio +
         (static_cast<double>(inputs.m) / total) * inputs.overall_ratio;
}

TeamRecord team_record(std::span<const MatchRecord> history, const std::string& team,
                       const Date& cutoff, std::optional<MatchContext> context_filter) {
  TeamRecord record;
  for (const MatchRecord& match : history) {
    if (!passes(match, &cutoff, context_filter)) continue;
    if (match.home_team != team && match.away_team != team) continue;
    record.played++;
    if (match.is_draw()) continue;
    const std::string& winner =
        match.home_goals > match.away_goals ? match.home_team : match.away_team;
    if (winner == team) record.wins++;
  }
  return record;
}

double overall_win_ratio(std::span<const MatchRecord> history, const Date& cutoff,
                         std::optional<MatchContext> context_filter) {
  long long appearances = 0;
  long long wins = 0;
  for (const MatchRecord& match : history) {
    if (!passes(match, &cutoff, context_filter)) continue;
    appearances += 2;
    if (!match.is_draw()) wins += 1;
  }
  if (appearances == 0) return 0.0;
  return static_cast<double>(wins) / static_cast<double>(appearances);
}

std::string baseline_predict(std::span<const MatchRecord> history, const std::string& x,
                             const std::string& y, const Date& cutoff,
                             const BaselineOptions& options) {
  const HeadToHead meetings = head_to_head(history, x, y, cutoff, options.context_filter);
  if (meetings.matches_played >= options.m) {
    if (meetings.wins_x > meetings.wins_y) return x;
    if (meetings.wins_y > meetings.wins_x) return y;
    // Equal head-to-head wins fall through to the ratio comparison.
  }

  const double c = overall_win_ratio(history, cutoff, options.context_filter);
  auto side_score = [&](const std::string& team) {
    const TeamRecord record = team_record(history, team, cutoff, options.context_filter);
    WwrInputs inputs;
    inputs.v = record.played;
    inputs.win_ratio = record.played > 0
                           ? static_cast<double>(record.wins) /
                                 static_cast<double>(record.played)
                           : 0.0;
    inputs.m = options.m;
    inputs.overall_ratio = c;
    return wwr(inputs);
  };
  const double score_x = side_score(x);
  const double score_y = side_score(y);
  if (score_x > score_y) return x;
  if (score_y > score_x) return y;
  return std::min(x, y);
}

}  // namespace footcast
