#include "footcast/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "footcast/csv.hpp"
#include "footcast/errors.hpp"
#include "footcast/predictor.hpp"

namespace footcast {

double accuracy(std::span<const std::string> picks, std::span<const std::string> actuals) {
  if (picks.empty() || picks.size() != actuals.size()) {
    throw std::invalid_argument("accuracy needs equal non-empty pick/actual lists");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (picks[i] == actuals[i]) correct++;
  }
  return static_cast<double>(correct) / static_cast<double>(picks.size()) * 100.0;
}

std::string format_pct(double pct) {
  // Half-up at the second decimal; printf alone rounds half-even.
  const double rounded = std::floor(pct * 100.0 + 0.5) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", rounded);
  return buf;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bucket_matches(
    std::span<const LedgerRow> ledger, int goal_threshold) {
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    (ledger[i].total_goals() >= goal_threshold ? buckets.first : buckets.second)
        .push_back(i);
  }
  return buckets;
}

namespace {

struct PickLists {
  std::vector<std::string> model;
  std::vector<std::string> baseline;
  std::vector<std::string> actual;
};

PickLists collect(std::span<const LedgerRow> ledger, std::span<const std::size_t> rows) {
  PickLists lists;
  for (std::size_t i : rows) {
    lists.model.push_back(ledger[i].model_pick);
    lists.baseline.push_back(ledger[i].baseline_pick);
    lists.actual.push_back(ledger[i].actual);
  }
  return lists;
}

}  // namespace

EvaluationReport compute_report(std::vector<LedgerRow> ledger, int goal_threshold,
                                std::vector<std::string> skipped) {
  EvaluationReport report;
  report.goal_threshold = goal_threshold;
  report.n_matches = ledger.size();
  report.skipped = std::move(skipped);

  if (!ledger.empty()) {
    std::vector<std::size_t> all(ledger.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const PickLists overall = collect(ledger, all);
    report.overall_accuracy_model = accuracy(overall.model, overall.actual);
    report.overall_accuracy_baseline = accuracy(overall.baseline, overall.actual);

    const auto [high, low] = bucket_matches(ledger, goal_threshold);
    report.high_count = high.size();
    report.low_count = low.size();
    if (!high.empty()) {
      const PickLists lists = collect(ledger, high);
      report.high_scoring_accuracy_model = accuracy(lists.model, lists.actual);
      report.high_scoring_accuracy_baseline = accuracy(lists.baseline, lists.actual);
    }
    if (!low.empty()) {
      const PickLists lists = collect(ledger, low);
      report.low_scoring_accuracy_model = accuracy(lists.model, lists.actual);
      report.low_scoring_accuracy_baseline = accuracy(lists.baseline, lists.actual);
    }

    std::vector<std::size_t> challenging;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
      if (ledger[i].baseline_pick != ledger[i].actual) challenging.push_back(i);
    }
    report.challenging_case_count = challenging.size();
    if (!challenging.empty()) {
      const PickLists lists = collect(ledger, challenging);
      report.challenging_case_model_accuracy = accuracy(lists.model, lists.actual);
    }
  }
  report.ledger = std::move(ledger);
  return report;
}

EvaluationReport evaluate(const EnsembleBundle& bundle,
                          std::span<const MatchRecord> history,
                          std::span<const MatchRecord> eval_matches,
                          const BaselineOptions& baseline_options, int goal_threshold) {
  // Ledger rows are assembled in date order so reruns produce identical files.
  std::vector<const MatchRecord*> ordered;
  ordered.reserve(eval_matches.size());
  for (const MatchRecord& match : eval_matches) ordered.push_back(&match);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const MatchRecord* a, const MatchRecord* b) {
                     if (!(a->date == b->date)) return a->date < b->date;
                     return a->match_id < b->match_id;
                   });

  std::vector<LedgerRow> ledger;
  std::vector<std::string> skipped;
  for (const MatchRecord* match_ptr : ordered) {
    const MatchRecord& match = *match_ptr;
    std::string actual;
    if (!match.is_draw()) {
      actual = match.home_goals > match.away_goals ? match.home_team : match.away_team;
    } else if (!match.winner.empty() && match.stage != MatchStage::group) {
      actual = match.winner;
    } else {
      skipped.push_back(match.match_id + ": drawn with no decisive winner");
      continue;
    }

    LedgerRow row;
    row.match_id = match.match_id;
    row.date = match.date;
    row.team_a = match.home_team;
    row.team_b = match.away_team;
    row.goals_a = match.home_goals;
    row.goals_b = match.away_goals;
    row.actual = actual;
    try {
      const PredictionResult prediction =
          predict_match(bundle, match.home_team, match.away_team, match.date.year);
      row.model_pick = prediction.winner;
    } catch (const DataError& err) {
      skipped.push_back(match.match_id + ": " + err.what());
      continue;
    }
    row.baseline_pick = baseline_predict(history, match.home_team, match.away_team,
                                         match.date, baseline_options);
    ledger.push_back(std::move(row));
  }
  return compute_report(std::move(ledger), goal_threshold, std::move(skipped));
}

namespace {

std::string optional_pct(const std::optional<double>& value) {
  return value ? format_pct(*value) : std::string("n/a");
}

}  // namespace

std::string render_report(const EvaluationReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof(line), "Evaluated matches: %zu (goal threshold %d)\n",
                report.n_matches, report.goal_threshold);
  os << line;
  std::snprintf(line, sizeof(line), "%-28s %12s %12s\n", "Metric", "Model", "Baseline");
  os << line;
  std::snprintf(line, sizeof(line), "%-28s %11s%% %11s%%\n", "Overall accuracy",
                format_pct(report.overall_accuracy_model).c_str(),
                format_pct(report.overall_accuracy_baseline).c_str());
  os << line;
  std::snprintf(line, sizeof(line), "%-28s %11s%% %11s%%\n",
                ("High-scoring (" + std::to_string(report.high_count) + ")").c_str(),
                optional_pct(report.high_scoring_accuracy_model).c_str(),
                optional_pct(report.high_scoring_accuracy_baseline).c_str());
  os << line;
  std::snprintf(line, sizeof(line), "%-28s %11s%% %11s%%\n",
                ("Low-scoring (" + std::to_string(report.low_count) + ")").c_str(),
                optional_pct(report.low_scoring_accuracy_model).c_str(),
                optional_pct(report.low_scoring_accuracy_baseline).c_str());
  os << line;
  std::snprintf(line, sizeof(line), "Challenging cases: %zu, model accuracy %s%%\n",
                report.challenging_case_count,
                optional_pct(report.challenging_case_model_accuracy).c_str());
  os << line;
  if (!report.skipped.empty()) {
    os << "Skipped matches:\n";
    for (const std::string& reason : report.skipped) os << "  " << reason << "\n";
  }
  return os.str();
}

void write_ledger(const std::string& path, const EvaluationReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write ledger: " + path);
  out << "match_id\tdate\tteam_a\tteam_b\tgoals_a\tgoals_b\tactual\tmodel_pick\t"
         "baseline_pick\n";
  for (const LedgerRow& row : report.ledger) {
    out << row.match_id << '\t' << to_string(row.date) << '\t' << row.team_a << '\t'
        << row.team_b << '\t' << row.goals_a << '\t' << row.goals_b << '\t' << row.actual
        << '\t' << row.model_pick << '\t' << row.baseline_pick << '\n';
  }
  if (!out) throw DataError("short write on ledger: " + path);
}

std::vector<LedgerRow> read_ledger(const std::string& path) {
  const DelimitedTable table = read_delimited(path, '\t');
  const char* needed[] = {"match_id", "date",   "team_a",     "team_b",       "goals_a",
                          "goals_b",  "actual", "model_pick", "baseline_pick"};
  std::size_t cols[9];
  for (std::size_t i = 0; i < 9; ++i) {
    auto idx = table.column(needed[i]);
    if (!idx) throw DataError("ledger missing column '" + std::string(needed[i]) + "'");
    cols[i] = *idx;
  }
  std::vector<LedgerRow> rows;
  for (const auto& cells : table.rows) {
    if (cells.size() != table.header.size()) {
      throw DataError("ledger row with wrong cell count");
    }
    LedgerRow row;
    row.match_id = cells[cols[0]];
    row.date = parse_date(cells[cols[1]]);
    row.team_a = cells[cols[2]];
    row.team_b = cells[cols[3]];
    row.goals_a = std::stoi(cells[cols[4]]);
    row.goals_b = std::stoi(cells[cols[5]]);
    row.actual = cells[cols[6]];
    row.model_pick = cells[cols[7]];
    row.baseline_pick = cells[cols[8]];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace footcast
