#include "footcast/predictor.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "footcast/errors.hpp"
#include "footcast/examples.hpp"

namespace footcast {

std::array<ProbPair, 5> family_probabilities(const EnsembleBundle& bundle,
                                             std::span<const double> raw) {
  const std::vector<double> x = bundle.preprocess(raw);
  std::array<ProbPair, 5> out{};
  for (std::size_t i = 0; i < bundle.classifiers.size(); ++i) {
    out[i] = bundle.classifiers[i]->predict_proba(x);
  }
  return out;
}

Winner majority_row_pick(const EnsembleBundle& bundle, std::span<const double> raw) {
  const auto probs = family_probabilities(bundle, raw);
  int votes_a = 0;
  for (const ProbPair& p : probs) {
    if (pick_from(p) == Winner::team_a) votes_a++;
  }
  return votes_a >= 3 ? Winner::team_a : Winner::team_b;
}

PredictionResult predict_match(const EnsembleBundle& bundle, const std::string& team_a,
                               const std::string& team_b, int year) {
  const AliasTable aliases(bundle.aliases);
  const std::string a = aliases.canonical(team_a);
  const std::string b = aliases.canonical(team_b);
  if (a == b) throw DataError("a team cannot play itself: " + a);

  // The pairing is evaluated with the lexicographically smaller name in the
  // first block, so both caller orientations compute identical numbers.
  const std::string& x = a < b ? a : b;
  const std::string& y = a < b ? b : a;

  const TeamProfile* px = lookup_profile(bundle.profiles, x, year, bundle.year_fallback_depth);
  const TeamProfile* py = lookup_profile(bundle.profiles, y, year, bundle.year_fallback_depth);
  if (!px || !py) {
    std::ostringstream os;
    os << "no profile for team '" << (px ? y : x) << "' at or before " << year
       << " (fallback depth " << bundle.year_fallback_depth << ")";
    throw DataError(os.str());
  }

  const std::size_t d = px->features.size();
  std::vector<double> raw_xy(2 * d), raw_yx(2 * d);
  for (std::size_t j = 0; j < d; ++j) {
    raw_xy[j] = px->features[j];
    raw_xy[d + j] = py->features[j];
    raw_yx[j] = py->features[j];
    raw_yx[d + j] = px->features[j];
  }
  const auto probs_xy = family_probabilities(bundle, raw_xy);
  const auto probs_yx = family_probabilities(bundle, raw_yx);

  PredictionResult result;
  result.team_a = a;
  result.team_b = b;

  std::array<double, 5> p_x{};  // per-family probability that x wins
  int votes_x = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    p_x[i] = 0.5 * (probs_xy[i].team_a + probs_yx[i].team_b);
    // An exact 0.5 votes the lexicographically smaller name, which is x.
    if (p_x[i] >= 0.5) votes_x++;
  }
  const bool x_wins = votes_x >= 3;
  result.winner = x_wins ? x : y;
  result.votes_for_winner = x_wins ? votes_x : 5 - votes_x;

  double prob_sum = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    const bool votes_for_x = p_x[i] >= 0.5;
    if (votes_for_x == x_wins) {
      prob_sum += x_wins ? p_x[i] : 1.0 - p_x[i];
    }
    const double toward_caller_a = (a == x) ? p_x[i] : 1.0 - p_x[i];
    result.per_family[i].team_a = toward_caller_a;
    result.per_family[i].team_b = 1.0 - toward_caller_a;
    result.votes_for_a[i] = (a == x) ? votes_for_x : !votes_for_x;
  }
  result.win_probability = prob_sum / static_cast<double>(result.votes_for_winner);
  return result;
}

std::string render_prediction(const PredictionResult& result, bool machine_readable) {
  if (machine_readable) {
    nlohmann::json out;
    out["team_a"] = result.team_a;
    out["team_b"] = result.team_b;
    out["winner"] = result.winner;
    out["win_probability"] = result.win_probability;
    out["votes_for_winner"] = result.votes_for_winner;
    nlohmann::json families;
    for (std::size_t i = 0; i < 5; ++i) {
      const ModelFamily family = kAllFamilies[i];
      families[to_string(family)] = {
          {"p_team_a", result.per_family[i].team_a},
          {"p_team_b", result.per_family[i].team_b},
          {"vote", result.votes_for_a[i] ? result.team_a : result.team_b},
      };
    }
    out["families"] = families;
    return out.dump();
  }

  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof(line), "%s vs %s\n", result.team_a.c_str(),
                result.team_b.c_str());
  os << line;
  std::snprintf(line, sizeof(line), "  winner: %s (%d of 5 votes, p=%.4f)\n",
                result.winner.c_str(), result.votes_for_winner, result.win_probability);
  os << line;
  for (std::size_t i = 0; i < 5; ++i) {
    std::snprintf(line, sizeof(line), "  %-14s p(%s)=%.4f  vote %s\n",
                  to_string(kAllFamilies[i]), result.team_a.c_str(),
                  result.per_family[i].team_a,
                  result.votes_for_a[i] ? result.team_a.c_str() : result.team_b.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace footcast
