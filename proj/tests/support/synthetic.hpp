#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "footcast/records.hpp"

namespace footcast::synthetic {

/// Planted-strength world: 32 teams with latent strengths in [0, 1], player
/// attributes proportional to strength plus noise, and match outcomes sampled
/// from a logistic in the strength difference. Confederations group teams by
/// strength and most historical matches stay inside one, which biases plain
/// win ratios and gives the attribute-driven model an edge.
struct World {
  std::vector<std::string> teams;          // 32 names
  std::vector<double> strengths;           // parallel to teams
  std::vector<PlayerRecord> players;
  std::vector<std::string> attribute_names;
  std::vector<MatchRecord> history;        // training years
  std::vector<MatchRecord> holdout;        // decisive cross-group test matches
};

struct WorldOptions {
  std::uint64_t seed = 1;
  int first_year = 2015;
  int last_train_year = 2021;
  int holdout_year = 2022;
  std::size_t history_matches = 600;
  std::size_t holdout_matches = 200;
  std::size_t players_per_roster = 8;
  double intra_group_fraction = 0.8;
  double outcome_sharpness = 12.0;  // logistic slope on strength difference
};

World make_world(const WorldOptions& options);

/// Writes the world as CLI-consumable files; returns (players, matches) paths.
/// Matches files cover history plus holdout.
std::pair<std::string, std::string> write_world_files(const World& world,
                                                      const std::string& directory);

}  // namespace footcast::synthetic
