#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "footcast/baseline.hpp"
#include "footcast/bundle.hpp"
#include "footcast/config.hpp"
#include "footcast/csv.hpp"
#include "footcast/errors.hpp"
#include "footcast/evaluation.hpp"
#include "footcast/feature_select.hpp"
#include "footcast/loaders.hpp"
#include "footcast/predictor.hpp"
#include "footcast/profiles.hpp"
#include "footcast/tournament.hpp"

#include "json.hpp"

namespace fc = footcast;

namespace {

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "key = value configuration file");
  cmd->add_option("--set", args.overrides,
                  "override one config key (key=value, repeatable)");
}

fc::RunConfig resolve_config(const CommonArgs& args) {
  fc::RunConfig config;
  if (!args.config_path.empty()) config = fc::RunConfig::from_file(args.config_path);
  for (const std::string& pair : args.overrides) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fc::ConfigError("--set expects key=value, got '" + pair + "'");
    }
    config.set(fc::trim(pair.substr(0, eq)), fc::trim(pair.substr(eq + 1)));
  }
  return config;
}

std::uint64_t require_seed(const fc::RunConfig& config) {
  const std::string text = config.get_string("seed");  // throws when absent
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || text.empty()) {
    throw fc::ConfigError("seed must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

char delimiter_from(const fc::RunConfig& config) {
  const std::string d = config.get_string("delimiter", ",");
  if (d == "tab" || d == "\\t") return '\t';
  if (d.size() != 1) throw fc::ConfigError("delimiter must be a single character");
  return d[0];
}

fc::AliasTable aliases_from(const fc::RunConfig& config) {
  const std::string path = config.get_string("aliases", "");
  return path.empty() ? fc::AliasTable{} : fc::AliasTable::from_file(path);
}

fc::MatchContext context_from_name(const std::string& name) {
  if (name == "world_cup") return fc::MatchContext::world_cup;
  if (name == "continental") return fc::MatchContext::continental;
  if (name == "friendly") return fc::MatchContext::friendly;
  if (name == "other") return fc::MatchContext::other;
  throw fc::ConfigError("unknown match context '" + name + "'");
}

fc::ContextTable contexts_from(const fc::RunConfig& config) {
  fc::ContextTable table = fc::ContextTable::defaults();
  for (const auto& [key, value] : config.values()) {
    if (key.rfind("context.", 0) == 0) {
      table.add(key.substr(8), context_from_name(value));
    }
  }
  return table;
}

fc::PlayerColumns player_columns_from(const fc::RunConfig& config) {
  fc::PlayerColumns columns;
  columns.player_id = config.get_string("players.id_column", columns.player_id);
  columns.team = config.get_string("players.team_column", columns.team);
  columns.year = config.get_string("players.year_column", columns.year);
  return columns;
}

fc::PlayersLoadResult load_players_from(const fc::RunConfig& config,
                                        const fc::AliasTable& aliases) {
  const std::string path = config.get_string("players");
  return fc::load_players(path, player_columns_from(config), aliases,
                          static_cast<int>(config.get_int("year_min", 2015)),
                          static_cast<int>(config.get_int("year_max", 2023)),
                          delimiter_from(config));
}

fc::MatchesLoadResult load_matches_from(const fc::RunConfig& config,
                                        const fc::AliasTable& aliases) {
  const std::string path = config.get_string("matches");
  return fc::load_matches(path, fc::MatchColumns{}, contexts_from(config), aliases,
                          delimiter_from(config));
}

fc::SelectionOptions selection_from(const fc::RunConfig& config) {
  fc::SelectionOptions options;
  options.completeness_min =
      config.get_double("selection.completeness_min", options.completeness_min);
  options.corr_max = config.get_double("selection.corr_max", options.corr_max);
  options.allowlist = config.get_string_list("selection.allowlist");
  return options;
}

std::optional<fc::MatchContext> baseline_filter_from(const fc::RunConfig& config) {
  const std::string name = config.get_string("baseline.context", "");
  if (name.empty()) return std::nullopt;
  return context_from_name(name);
}

fc::BaselineOptions baseline_options_from(const fc::RunConfig& config,
                                          std::span<const fc::MatchRecord> history) {
  fc::BaselineOptions options;
  options.context_filter = baseline_filter_from(config);
  if (config.has("baseline.m")) {
    options.m = static_cast<int>(config.get_int("baseline.m", 5));
  } else if (!history.empty()) {
    options.m = fc::compute_match_threshold(history, options.context_filter);
  } else {
    options.m = 5;
  }
  return options;
}

std::string out_path(const fc::RunConfig& config, const std::string& key,
                     const std::string& fallback_name) {
  if (config.has(key)) return config.get_string(key);
  const std::string dir = config.get_string("out_dir", ".");
  std::filesystem::create_directories(dir);
  return dir + "/" + fallback_name;
}

std::string bundle_path_in(const fc::RunConfig& config) {
  if (config.has("bundle")) return config.get_string("bundle");
  return config.get_string("out_dir", ".") + "/ensemble.bundle";
}

void print_load_report(const char* what, const fc::LoadReport& report) {
  std::printf("%s: %zu accepted, %zu rejected\n", what, report.accepted, report.rejected);
  for (const std::string& line : report.diagnostics) {
    std::printf("  reject %s\n", line.c_str());
  }
  for (const std::string& line : report.warnings) {
    std::printf("  warn %s\n", line.c_str());
  }
}

int cmd_ingest(const CommonArgs& common) {
  const fc::RunConfig config = resolve_config(common);
  const fc::AliasTable aliases = aliases_from(config);
  const fc::PlayersLoadResult players = load_players_from(config, aliases);
  const fc::MatchesLoadResult matches = load_matches_from(config, aliases);

  print_load_report("players", players.report);
  print_load_report("matches", matches.report);

  const fc::SelectionOptions selection = selection_from(config);
  fc::SelectionReport selection_report;
  const std::vector<std::string> retained = fc::select_attributes(
      players.records, players.attribute_names, selection, &selection_report);
  std::printf("attributes: %zu retained of %zu", retained.size(),
              players.attribute_names.size());
  if (!selection_report.dropped_incomplete.empty()) {
    std::printf(", %zu below completeness", selection_report.dropped_incomplete.size());
  }
  if (!selection_report.dropped_correlated.empty()) {
    std::printf(", %zu redundant", selection_report.dropped_correlated.size());
  }
  std::printf("\n");

  const fc::ProfileMap profiles = fc::build_team_profiles(players.records, retained);
  std::map<int, std::size_t> per_year;
  for (const auto& [key, profile] : profiles) per_year[key.second]++;
  std::printf("profiles: %zu team-years\n", profiles.size());
  for (const auto& [year, count] : per_year) {
    std::printf("  %d: %zu teams\n", year, count);
  }
  return 0;
}

int cmd_train(const CommonArgs& common) {
  const fc::RunConfig config = resolve_config(common);
  const std::uint64_t seed = require_seed(config);
  const fc::AliasTable aliases = aliases_from(config);
  const fc::PlayersLoadResult players = load_players_from(config, aliases);
  const fc::MatchesLoadResult matches = load_matches_from(config, aliases);

  const std::vector<std::string> retained = fc::select_attributes(
      players.records, players.attribute_names, selection_from(config));
  const fc::ProfileMap profiles = fc::build_team_profiles(players.records, retained);

  fc::TrainSettings settings;
  settings.k_folds = static_cast<std::size_t>(config.get_int("k_folds", 5));
  settings.stratified = config.get_bool("folds.stratified", true);
  settings.year_fallback_depth =
      static_cast<int>(config.get_int("profile.year_fallback_depth", 2));
  settings.search.seed = seed;
  settings.search.pca_variance_target =
      config.get_double("pca.variance_target", 0.95);
  settings.search.scaler_std_floor = config.get_double("scaler.std_floor", 1e-12);
  const std::string pca_mode = config.get_string("pca", "searched");
  if (pca_mode == "off") {
    settings.search.pca_options = {false};
  } else if (pca_mode == "on") {
    settings.search.pca_options = {true};
  } else if (pca_mode == "searched") {
    settings.search.pca_options = {false, true};
  } else {
    throw fc::ConfigError("pca must be one of off, on, searched");
  }

  fc::AssembleReport assemble_report;
  const fc::ExampleSet examples =
      fc::assemble_examples(matches.records, profiles, retained,
                            settings.year_fallback_depth, &assemble_report);
  std::printf("examples: %zu rows from %zu of %zu matches (%zu draws, %zu unprofiled)\n",
              examples.size(), assemble_report.matches_used, assemble_report.matches_in,
              assemble_report.skipped_draws, assemble_report.skipped_missing_profile);

  fc::SplitOptions split_options;
  split_options.test_fraction = config.get_double("test_fraction", 0.2);
  const std::string mode = config.get_string("split.mode", "random");
  if (mode == "chronological") {
    split_options.mode = fc::SplitMode::chronological;
  } else if (mode != "random") {
    throw fc::ConfigError("split.mode must be random or chronological");
  }
  const fc::TrainTestSplit split = fc::split_train_test(examples, split_options, seed);
  std::printf("split: %zu train rows, %zu test rows (%s)\n", split.train.size(),
              split.test.size(), mode.c_str());

  std::array<fc::FamilyGrid, 5> grids;
  for (std::size_t i = 0; i < fc::kAllFamilies.size(); ++i) {
    grids[i] = fc::grid_from_config(fc::kAllFamilies[i], config);
  }

  const fc::TrainOutcome outcome =
      fc::train_ensemble(split.train, grids, settings, profiles, retained,
                         aliases.entries(), config.values());

  std::printf("pca: %s\n", outcome.pca_chosen ? "on" : "off");
  for (std::size_t i = 0; i < fc::kAllFamilies.size(); ++i) {
    const auto& search = outcome.searches[i];
    const auto& cell = search.cells[outcome.chosen_cells[i]];
    std::printf("%-14s cv accuracy %.4f  params", fc::to_string(search.family),
                cell.mean_accuracy);
    for (const auto& [name, value] : cell.hyperparams) {
      std::printf(" %s=%g", name.c_str(), value);
    }
    std::printf("\n");
  }

  if (!split.test_rows.empty()) {
    std::size_t correct = 0;
    for (std::size_t r = 0; r < split.test.size(); ++r) {
      if (fc::majority_row_pick(outcome.bundle, split.test.matrix.row(r)) ==
          split.test.labels[r]) {
        correct++;
      }
    }
    std::printf("held-out rows: %zu of %zu correct (%.4f)\n", correct, split.test.size(),
                static_cast<double>(correct) / static_cast<double>(split.test.size()));
  }

  const std::string bundle_path = out_path(config, "bundle", "ensemble.bundle");
  fc::save_bundle(outcome.bundle, bundle_path);
  std::printf("bundle: %s\n", bundle_path.c_str());

  // Full audit trail of every evaluated grid cell.
  nlohmann::json audit;
  audit["pca_chosen"] = outcome.pca_chosen;
  audit["seed"] = seed;
  nlohmann::json families;
  for (std::size_t i = 0; i < fc::kAllFamilies.size(); ++i) {
    const auto& search = outcome.searches[i];
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : search.cells) {
      nlohmann::json entry;
      entry["hyperparams"] = cell.hyperparams;
      entry["pca"] = cell.pca_on;
      entry["valid"] = cell.valid;
      if (cell.valid) {
        entry["fold_accuracies"] = cell.fold_accuracies;
        entry["mean_accuracy"] = cell.mean_accuracy;
        entry["mean_log_loss"] = cell.mean_log_loss;
      }
      cells.push_back(entry);
    }
    nlohmann::json family;
    family["cells"] = cells;
    family["best_index"] = search.best_index;
    family["chosen_index"] = outcome.chosen_cells[i];
    families[fc::to_string(search.family)] = family;
  }
  audit["families"] = families;
  const std::string report_path = out_path(config, "training_report", "training_report.json");
  std::ofstream report_out(report_path, std::ios::binary);
  if (!report_out) throw fc::DataError("cannot write training report: " + report_path);
  report_out << audit.dump(2) << "\n";
  std::printf("report: %s\n", report_path.c_str());
  return 0;
}

int cmd_predict(const CommonArgs& common, const std::string& team_a,
                const std::string& team_b, int year, bool as_json) {
  const fc::RunConfig config = resolve_config(common);
  const fc::EnsembleBundle bundle = fc::load_bundle(bundle_path_in(config));
  const fc::PredictionResult result = fc::predict_match(bundle, team_a, team_b, year);
  std::fputs(fc::render_prediction(result, as_json).c_str(), stdout);
  if (as_json) std::fputs("\n", stdout);
  return 0;
}

int cmd_evaluate(const CommonArgs& common) {
  const fc::RunConfig config = resolve_config(common);
  const fc::EnsembleBundle bundle = fc::load_bundle(bundle_path_in(config));

  // Matches canonicalize through the bundle's alias snapshot unless the
  // config supplies its own table.
  fc::AliasTable aliases(bundle.aliases);
  if (config.has("aliases")) aliases = fc::AliasTable::from_file(config.get_string("aliases"));
  const fc::MatchesLoadResult matches = load_matches_from(config, aliases);

  const fc::Date start = fc::parse_date(config.get_string("eval.start"));
  const fc::Date end = fc::parse_date(config.get_string("eval.end", "9999-12-31"));
  std::vector<fc::MatchRecord> eval_matches;
  for (const fc::MatchRecord& match : matches.records) {
    if (!(match.date < start) && !(end < match.date)) eval_matches.push_back(match);
  }
  if (eval_matches.empty()) {
    throw fc::DataError("no matches between " + fc::to_string(start) + " and " +
                        fc::to_string(end));
  }

  const fc::BaselineOptions baseline = baseline_options_from(config, matches.records);
  const int goal_threshold = static_cast<int>(config.get_int("goal_threshold", 4));
  const fc::EvaluationReport report = fc::evaluate(bundle, matches.records, eval_matches,
                                                   baseline, goal_threshold);

  if (!config.has("goal_threshold")) {
    std::printf("note: goal threshold %d is an unvalidated default\n", goal_threshold);
  }
  std::printf("baseline meeting threshold m = %d%s\n", baseline.m,
              config.has("baseline.m") ? "" : " (75th percentile of pair meetings)");
  std::fputs(fc::render_report(report).c_str(), stdout);

  const std::string ledger_path = out_path(config, "ledger", "evaluation_ledger.tsv");
  fc::write_ledger(ledger_path, report);
  std::printf("ledger: %s\n", ledger_path.c_str());
  return 0;
}

int cmd_simulate(const CommonArgs& common) {
  const fc::RunConfig config = resolve_config(common);
  (void)require_seed(config);  // reproducibility contract: simulate runs are seeded
  const fc::EnsembleBundle bundle = fc::load_bundle(bundle_path_in(config));
  const fc::BracketSpec spec = fc::BracketSpec::from_file(config.get_string("bracket"));
  const fc::SimulationResult result = fc::simulate(bundle, spec);
  std::fputs(fc::render_bracket(result).c_str(), stdout);

  const std::string tree_path = out_path(config, "tree", "bracket_tree.json");
  fc::write_tree_file(tree_path, result);
  std::printf("tree: %s\n", tree_path.c_str());
  return 0;
}

int cmd_baseline(const CommonArgs& common, const std::string& team_x,
                 const std::string& team_y, const std::string& cutoff_text) {
  const fc::RunConfig config = resolve_config(common);
  const fc::AliasTable aliases = aliases_from(config);
  const fc::MatchesLoadResult matches = load_matches_from(config, aliases);
  const fc::Date cutoff = fc::parse_date(cutoff_text);

  const std::string x = aliases.canonical(team_x);
  const std::string y = aliases.canonical(team_y);
  const fc::BaselineOptions options = baseline_options_from(config, matches.records);
  const fc::HeadToHead meetings =
      fc::head_to_head(matches.records, x, y, cutoff, options.context_filter);
  const std::string pick =
      fc::baseline_predict(matches.records, x, y, cutoff, options);

  std::printf("head-to-head before %s: %d meetings, %s %d wins, %s %d wins, %d draws\n",
              cutoff_text.c_str(), meetings.matches_played, x.c_str(), meetings.wins_x,
              y.c_str(), meetings.wins_y, meetings.draws);
  std::printf("meeting threshold m = %d\n", options.m);
  std::printf("pick: %s\n", pick.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Football match outcome prediction: team profiles, a five-family "
               "voting ensemble, a win-ratio baseline and bracket simulation"};
  app.require_subcommand(1);

  CommonArgs common;

  CLI::App* ingest = app.add_subcommand("ingest", "Validate input files and report coverage");
  add_common(ingest, common);

  CLI::App* train = app.add_subcommand("train", "Grid-search, fit and save the ensemble");
  add_common(train, common);

  std::string team_a, team_b;
  int year = 0;
  bool as_json = false;
  CLI::App* predict = app.add_subcommand("predict", "Predict one pairing from a bundle");
  add_common(predict, common);
  predict->add_option("team_a", team_a, "first team")->required();
  predict->add_option("team_b", team_b, "second team")->required();
  predict->add_option("--year", year, "profile year")->required();
  predict->add_flag("--json", as_json, "machine-readable output");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score model and baseline on a date range");
  add_common(evaluate, common);

  CLI::App* simulate = app.add_subcommand("simulate", "Run a bracket to a champion");
  add_common(simulate, common);

  std::string team_x, team_y, cutoff;
  CLI::App* baseline = app.add_subcommand("baseline", "Standalone baseline pick for a pairing");
  add_common(baseline, common);
  baseline->add_option("team_x", team_x, "first team")->required();
  baseline->add_option("team_y", team_y, "second team")->required();
  baseline->add_option("--cutoff", cutoff, "history cutoff date (YYYY-MM-DD)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(common);
    if (train->parsed()) return cmd_train(common);
    if (predict->parsed()) return cmd_predict(common, team_a, team_b, year, as_json);
    if (evaluate->parsed()) return cmd_evaluate(common);
    if (simulate->parsed()) return cmd_simulate(common);
    if (baseline->parsed()) return cmd_baseline(common, team_x, team_y, cutoff);
  } catch (const fc::ConfigError& err) {
    std::fprintf(stderr, "config error: %s\n", err.what());
    return 1;
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "config error: %s\n", err.what());
    return 1;
  } catch (const fc::DataError& err) {
    std::fprintf(stderr, "data error: %s\n", err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "internal error: %s\n", err.what());
    return 3;
  }
  return 0;
}
