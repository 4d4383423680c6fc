#include "footcast/examples.hpp"

namespace footcast {

ExampleSet ExampleSet::subset(std::span<const std::size_t> rows) const {
  ExampleSet out;
  out.matrix = matrix.select_rows(rows);
  out.feature_names = feature_names;
  out.labels.reserve(rows.size());
  out.provenance.reserve(rows.size());
  for (std::size_t r : rows) {
    out.labels.push_back(labels[r]);
    out.provenance.push_back(provenance[r]);
  }
  return out;
}

const TeamProfile* lookup_profile(const ProfileMap& profiles, const std::string& team,
                                  int year, int fallback_depth) {
  for (int back = 0; back <= fallback_depth; ++back) {
    auto it = profiles.find({team, year - back});
    if (it != profiles.end()) return &it->second;
  }
  return nullptr;
}

ExampleSet assemble_examples(const std::vector<MatchRecord>& matches,
                             const ProfileMap& profiles,
                             const std::vector<std::string>& retained,
                             int year_fallback_depth, AssembleReport* report) {
  AssembleReport local;
  AssembleReport& rep = report ? *report : local;
  rep.matches_in = matches.size();

  struct Usable {
    const MatchRecord* match;
    const TeamProfile* home;
    const TeamProfile* away;
  };
  std::vector<Usable> usable;
  for (const auto& match : matches) {
    if (match.is_draw()) {
      rep.skipped_draws++;
      continue;
    }
    const TeamProfile* home =
        lookup_profile(profiles, match.home_team, match.date.year, year_fallback_depth);
    const TeamProfile* away =
        lookup_profile(profiles, match.away_team, match.date.year, year_fallback_depth);
    if (!home || !away) {
      rep.skipped_missing_profile++;
      continue;
    }
    usable.push_back({&match, home, away});
  }
  rep.matches_used = usable.size();

  const std::size_t d = retained.size();
  ExampleSet set;
  for (const auto& name : retained) set.feature_names.push_back("a." + name);
  for (const auto& name : retained) set.feature_names.push_back("b." + name);
  set.matrix = Matrix(usable.size() * 2, d * 2);
  set.labels.reserve(usable.size() * 2);
  set.provenance.reserve(usable.size() * 2);

  for (std::size_t i = 0; i < usable.size(); ++i) {
    const auto& u = usable[i];
    const Winner direct =
        u.match->home_goals > u.match->away_goals ? Winner::team_a : Winner::team_b;
    auto forward = set.matrix.row(2 * i);
    auto mirrored = set.matrix.row(2 * i + 1);
    for (std::size_t j = 0; j < d; ++j) {
      forward[j] = u.home->features[j];
      forward[d + j] = u.away->features[j];
      mirrored[j] = u.away->features[j];
      mirrored[d + j] = u.home->features[j];
    }
    set.labels.push_back(direct);
    set.labels.push_back(flip(direct));
    set.provenance.push_back({u.match->match_id, false, u.match->date});
    set.provenance.push_back({u.match->match_id, true, u.match->date});
  }
  return set;
}

}  // namespace footcast
