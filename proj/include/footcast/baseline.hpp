#pragma once

#include <optional>
#include <span>
#include <string>

#include "footcast/records.hpp"

namespace footcast {

struct HeadToHead {
  std::string team_x;
  std::string team_y;
  int matches_played = 0;
  int wins_x = 0;
  int wins_y = 0;
  int draws = 0;
};

/// Meetings strictly before the cutoff, counted regardless of orientation.
HeadToHead head_to_head(std::span<const MatchRecord> history, const std::string& x,
                        const std::string& y, const Date& cutoff,
                        std::optional<MatchContext> context_filter = std::nullopt);

/// 75th percentile (ascending sort, 0-based index ceil(0.75 n) clamped to the
/// last element) of per-pair meeting counts over all pairs that met at least
/// once. Throws DataError on empty history.
int compute_match_threshold(std::span<const MatchRecord> history,
                            std::optional<MatchContext> context_filter = std::nullopt);

/// Weighted Win Ratio inputs: v matches played, win ratioR = wins / v
/// (0 when v = 0), threshold parameter m, overall win ratio C across all
/// teams.
struct WwrInputs {
  long long v = 0;
  double win_ratio = 0.0;
  long long m = 0;
  double overall_ratio = 0.0;
};

/// WWR = (v/(v+m)) R + (m/(v+m)) C. Throws std::invalid_argument for
/// negative v and requires v + m > 0.
double wwr(const WwrInputs& inputs);

struct BaselineOptions {
  int m = 5;
  std::optional<MatchContext> context_filter;
};

/// One team's appearances and decisive wins strictly before the cutoff.
struct TeamRecord {
  long long played = 0;
  long long wins = 0;
};
TeamRecord team_record(std::span<const MatchRecord> history, const std::string& team,
                       const Date& cutoff, std::optional<MatchContext> context_filter);

/// Overall win ratio C: decisive wins over team-appearances (two per match,
/// draws included) strictly before the cutoff.
double overall_win_ratio(std::span<const MatchRecord> history, const Date& cutoff,
                         std::optional<MatchContext> context_filter);

/// Head-to-head rule when the pair met at least m times (more wins
/// prevails; equal wins fall through), WWR comparison otherwise; a final WWR
/// tie picks the lexicographically smaller canonical name.
std::string baseline_predict(std::span<const MatchRecord> history, const std::string& x,
                             const std::string& y, const Date& cutoff,
                             const BaselineOptions& options);

}  // namespace footcast
