#include "footcast/tournament.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "footcast/config.hpp"
#include "footcast/csv.hpp"
#include "footcast/errors.hpp"
#include "footcast/examples.hpp"

namespace footcast {

namespace {

BracketSpec::SlotRef parse_slot(const std::string& text) {
  const std::string trimmed = trim(text);
  if (trimmed.size() < 2) throw DataError("bad bracket slot '" + text + "'");
  BracketSpec::SlotRef ref;
  ref.group = trimmed.substr(0, trimmed.size() - 1);
  const char rank = trimmed.back();
  if (rank != '1' && rank != '2') {
    throw DataError("bracket slot rank must be 1 or 2: '" + text + "'");
  }
  ref.rank = rank - '0';
  return ref;
}

}  // namespace

BracketSpec BracketSpec::from_file(const std::string& path) {
  const RunConfig config = RunConfig::from_file(path);
  BracketSpec spec;
  spec.year = static_cast<int>(config.get_int("year", 0));
  if (spec.year == 0) throw DataError("bracket file missing 'year': " + path);
  spec.third_place = config.get_bool("third_place", false);

  for (const auto& [key, value] : config.values()) {
    if (key.rfind("group.", 0) != 0) continue;
    Group group;
    group.name = key.substr(6);
    std::vector<std::string> teams;
    std::stringstream ss(value);
    std::string cell;
    while (std::getline(ss, cell, ',')) teams.push_back(trim(cell));
    if (teams.size() != 4) {
      throw DataError("group '" + group.name + "' must list exactly 4 teams");
    }
    std::copy(teams.begin(), teams.end(), group.teams.begin());
    spec.groups.push_back(std::move(group));
  }
  if (spec.groups.size() != 8) {
    throw DataError("bracket file must define 8 groups, found " +
                    std::to_string(spec.groups.size()));
  }
  std::set<std::string> distinct;
  for (const auto& group : spec.groups) {
    for (const auto& team : group.teams) distinct.insert(team);
  }
  if (distinct.size() != 32) {
    throw DataError("bracket file must name 32 distinct teams");
  }

  for (int i = 1; i <= 8; ++i) {
    const std::string key = "r16." + std::to_string(i);
    const std::string value = config.get_string(key, "");
    if (value.empty()) throw DataError("bracket file missing '" + key + "'");
    const auto comma = value.find(',');
    if (comma == std::string::npos) {
      throw DataError("'" + key + "' must pair two slots");
    }
    const SlotRef left = parse_slot(value.substr(0, comma));
    const SlotRef right = parse_slot(value.substr(comma + 1));
    for (const SlotRef& ref : {left, right}) {
      const bool known = std::any_of(spec.groups.begin(), spec.groups.end(),
                                     [&](const Group& g) { return g.name == ref.group; });
      if (!known) throw DataError("slot references unknown group '" + ref.group + "'");
    }
    spec.round_of_16.emplace_back(left, right);
  }
  return spec;
}

SimulationResult simulate(const EnsembleBundle& bundle, const BracketSpec& spec) {
  // Resolve every team up front so a missing profile fails before any tie.
  const AliasTable aliases(bundle.aliases);
  for (const auto& group : spec.groups) {
    for (const auto& team : group.teams) {
      const std::string name = aliases.canonical(team);
      if (!lookup_profile(bundle.profiles, name, spec.year, bundle.year_fallback_depth)) {
        throw DataError("no profile for bracket team '" + team + "' at or before " +
                        std::to_string(spec.year));
      }
    }
  }

  SimulationResult result;
  std::map<std::string, std::array<std::string, 2>> advancing;  // group -> {1st, 2nd}
  for (const auto& group : spec.groups) {
    std::vector<GroupStanding> table;
    for (const auto& team : group.teams) table.push_back({team, 0, 0.0});
    for (std::size_t i = 0; i < group.teams.size(); ++i) {
      for (std::size_t j = i + 1; j < group.teams.size(); ++j) {
        const PredictionResult tie =
            predict_match(bundle, group.teams[i], group.teams[j], spec.year);
        result.group_predictions++;
        const std::size_t w =
            tie.winner == aliases.canonical(group.teams[i]) ? i : j;
        table[w].predicted_wins++;
        table[w].probability_score += tie.win_probability;
      }
    }
    std::sort(table.begin(), table.end(), [](const GroupStanding& a, const GroupStanding& b) {
      if (a.predicted_wins != b.predicted_wins) return a.predicted_wins > b.predicted_wins;
      if (a.probability_score != b.probability_score) {
        return a.probability_score > b.probability_score;
      }
      return a.team < b.team;
    });
    advancing[group.name] = {table[0].team, table[1].team};
    result.group_tables.emplace_back(group.name, std::move(table));
  }

  auto slot_team = [&](const BracketSpec::SlotRef& ref) {
    return advancing.at(ref.group)[static_cast<std::size_t>(ref.rank - 1)];
  };

  auto play = [&](const std::string& round, std::size_t index, const std::string& a,
                  const std::string& b) {
    KnockoutTie tie;
    tie.round = round;
    tie.index = index;
    tie.result = predict_match(bundle, a, b, spec.year);
    result.knockout_predictions++;
    result.knockout.push_back(tie);
    return tie.result;
  };
  auto loser_of = [](const PredictionResult& r) {
    return r.winner == r.team_a ? r.team_b : r.team_a;
  };

  std::vector<std::string> round_teams;
  for (const auto& [left, right] : spec.round_of_16) {
    round_teams.push_back(slot_team(left));
    round_teams.push_back(slot_team(right));
  }

  const char* round_names[] = {"R16", "QF", "SF"};
  std::vector<std::string> semifinal_losers;
  for (const char* round : round_names) {
    std::vector<std::string> winners;
    for (std::size_t i = 0; i + 1 < round_teams.size(); i += 2) {
      const PredictionResult tie =
          play(round, i / 2, round_teams[i], round_teams[i + 1]);
      winners.push_back(tie.winner);
      if (std::string(round) == "SF") semifinal_losers.push_back(loser_of(tie));
    }
    round_teams = std::move(winners);
  }

  if (spec.third_place && semifinal_losers.size() == 2) {
    play("3rd", 0, semifinal_losers[0], semifinal_losers[1]);
  }
  const PredictionResult final_tie = play("Final", 0, round_teams[0], round_teams[1]);
  result.champion = final_tie.winner;
  return result;
}

std::string render_bracket(const SimulationResult& result) {
  std::ostringstream os;
  char line[200];
  for (const auto& [name, table] : result.group_tables) {
    os << "Group " << name << "\n";
    for (const GroupStanding& standing : table) {
      std::snprintf(line, sizeof(line), "  %-24s wins %d  score %.4f\n",
                    standing.team.c_str(), standing.predicted_wins,
                    standing.probability_score);
      os << line;
    }
  }
  std::string current;
  for (const KnockoutTie& tie : result.knockout) {
    if (tie.round != current) {
      current = tie.round;
      os << current << "\n";
    }
    std::snprintf(line, sizeof(line), "  %s vs %s -> %s (p=%.4f)\n",
                  tie.result.team_a.c_str(), tie.result.team_b.c_str(),
                  tie.result.winner.c_str(), tie.result.win_probability);
    os << line;
  }
  os << "Champion: " << result.champion << "\n";
  return os.str();
}

void write_tree_file(const std::string& path, const SimulationResult& result) {
  nlohmann::json tree;
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [name, table] : result.group_tables) {
    nlohmann::json group;
    group["name"] = name;
    nlohmann::json standings = nlohmann::json::array();
    for (const GroupStanding& standing : table) {
      standings.push_back({{"team", standing.team},
                           {"predicted_wins", standing.predicted_wins},
                           {"probability_score", standing.probability_score}});
    }
    group["standings"] = standings;
    groups.push_back(group);
  }
  tree["groups"] = groups;

  nlohmann::json knockout = nlohmann::json::array();
  for (const KnockoutTie& tie : result.knockout) {
    knockout.push_back({{"round", tie.round},
                        {"index", tie.index},
                        {"team_a", tie.result.team_a},
                        {"team_b", tie.result.team_b},
                        {"winner", tie.result.winner},
                        {"win_probability", tie.result.win_probability}});
  }
  tree["knockout"] = knockout;
  tree["champion"] = result.champion;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write bracket tree: " + path);
  out << tree.dump(2) << "\n";
}

}  // namespace footcast
