#pragma once

#include <array>
#include <string>
#include <vector>

#include "footcast/predictor.hpp"

namespace footcast {

/// Tournament layout: eight named groups of four plus the round-of-16 slot
/// template. Parsed from a plain key-value bracket file.
struct BracketSpec {
  struct Group {
    std::string name;
    std::array<std::string, 4> teams;
  };
  struct SlotRef {
    std::string group;
    int rank = 1;  // 1 = group winner, 2 = runner-up
  };

  int year = 0;
  bool third_place = false;
  std::vector<Group> groups;
  std::vector<std::pair<SlotRef, SlotRef>> round_of_16;

  static BracketSpec from_file(const std::string& path);
};

struct GroupStanding {
  std::string team;
  int predicted_wins = 0;
  double probability_score = 0.0;  // summed win probabilities of predicted wins
};

struct KnockoutTie {
  std::string round;  // "R16", "QF", "SF", "3rd", "Final"
  std::size_t index = 0;
  PredictionResult result;
};

struct SimulationResult {
  std::vector<std::pair<std::string, std::vector<GroupStanding>>> group_tables;
  std::vector<KnockoutTie> knockout;
  std::string champion;
  std::size_t group_predictions = 0;
  std::size_t knockout_predictions = 0;
};

/// Round-robin within each group (standing = predicted wins, ties by summed
/// win probability then name), top two advance per template, knockout rounds
/// pair consecutive winners down to the champion. Deterministic given the
/// bundle. Fails before any tie is played if a team lacks a profile.
SimulationResult simulate(const EnsembleBundle& bundle, const BracketSpec& spec);

std::string render_bracket(const SimulationResult& result);
void write_tree_file(const std::string& path, const SimulationResult& result);

}  // namespace footcast
