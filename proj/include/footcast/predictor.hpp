#pragma once

#include <array>
#include <string>

#include "footcast/bundle.hpp"

namespace footcast {

/// Majority-voting prediction for one pairing. per_family probabilities are
/// reported in the caller's (team_a, team_b) orientation.
struct PredictionResult {
  std::string team_a;
  std::string team_b;
  std::string winner;
  double win_probability = 0.0;  // mean winner-side probability of the majority
  std::array<ProbPair, 5> per_family{};  // kAllFamilies order
  std::array<bool, 5> votes_for_a{};
  int votes_for_winner = 0;
};

/// Builds the feature vector for both orientations, averages each family's
/// team_a probability across them, lets each family vote for its
/// higher-probability side (exact ties vote the lexicographically smaller
/// name) and takes the majority of five. Internally the pairing is evaluated
/// in canonical name order, which makes the result exactly order-invariant.
PredictionResult predict_match(const EnsembleBundle& bundle, const std::string& team_a,
                               const std::string& team_b, int year);

/// Majority vote over the five classifiers for one already-assembled raw
/// feature row. Used for scoring example sets; per-family probability ties
/// pick team_b, a 0-vote impossibility aside the majority always exists.
Winner majority_row_pick(const EnsembleBundle& bundle, std::span<const double> raw);

/// All five families' probabilities for one raw feature row.
std::array<ProbPair, 5> family_probabilities(const EnsembleBundle& bundle,
                                             std::span<const double> raw);

std::string render_prediction(const PredictionResult& result, bool machine_readable);

}  // namespace footcast
