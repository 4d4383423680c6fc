#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "footcast/baseline.hpp"
#include "footcast/bundle.hpp"
#include "footcast/records.hpp"

namespace footcast {

/// One evaluated match: what happened and what each predictor picked.
struct LedgerRow {
  std::string match_id;
  Date date;
  std::string team_a;
  std::string team_b;
  int goals_a = 0;
  int goals_b = 0;
  std::string actual;
  std::string model_pick;
  std::string baseline_pick;

  int total_goals() const { return goals_a + goals_b; }
};

struct EvaluationReport {
  std::size_t n_matches = 0;
  int goal_threshold = 0;
  double overall_accuracy_model = 0.0;
  double overall_accuracy_baseline = 0.0;
  std::size_t high_count = 0;
  std::size_t low_count = 0;
  std::optional<double> high_scoring_accuracy_model;
  std::optional<double> high_scoring_accuracy_baseline;
  std::optional<double> low_scoring_accuracy_model;
  std::optional<double> low_scoring_accuracy_baseline;
  std::size_t challenging_case_count = 0;  // matches the baseline got wrong
  std::optional<double> challenging_case_model_accuracy;
  std::vector<LedgerRow> ledger;
  std::vector<std::string> skipped;  // "match_id: reason" lines
};

/// Correct / total * 100. Throws std::invalid_argument on empty or
/// mismatched inputs.
double accuracy(std::span<const std::string> picks, std::span<const std::string> actuals);

/// Percentage formatted to two decimals with half-up rounding.
std::string format_pct(double pct);

/// Splits ledger indices into (high, low): high holds total goals >= threshold.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bucket_matches(
    std::span<const LedgerRow> ledger, int goal_threshold);

/// Fills every report field from a finished ledger. Pure function of its
/// inputs.
EvaluationReport compute_report(std::vector<LedgerRow> ledger, int goal_threshold,
                                std::vector<std::string> skipped = {});

/// Runs both predictors on every eval match (history cutoff at each match's
/// date) and reports. Draws resolve through the recorded winner when the
/// stage is not group; otherwise the match is skipped and listed. Matches
/// with unresolvable profiles are skipped and listed.
EvaluationReport evaluate(const EnsembleBundle& bundle,
                          std::span<const MatchRecord> history,
                          std::span<const MatchRecord> eval_matches,
                          const BaselineOptions& baseline_options, int goal_threshold);

/// Aligned text table plus the bucket and challenging-case summary.
std::string render_report(const EvaluationReport& report);

/// Tab-separated audit ledger.
void write_ledger(const std::string& path, const EvaluationReport& report);
std::vector<LedgerRow> read_ledger(const std::string& path);

}  // namespace footcast
