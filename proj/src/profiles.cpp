#include "footcast/profiles.hpp"

#include <map>

namespace footcast {

ProfileMap build_team_profiles(const std::vector<PlayerRecord>& players,
                               const std::vector<std::string>& retained,
                               Imputation imputation) {
  (void)imputation;  // single strategy today; the enum keeps call sites explicit

  // Global per-(attribute, year) and per-attribute running sums for imputation.
  std::map<std::pair<std::string, int>, std::pair<double, std::size_t>> year_sums;
  std::map<std::string, std::pair<double, std::size_t>> all_sums;
  for (const auto& player : players) {
    for (const auto& name : retained) {
      if (const double* value = player.attribute(name)) {
        auto& ys = year_sums[{name, player.year}];
        ys.first += *value;
        ys.second++;
        auto& as = all_sums[name];
        as.first += *value;
        as.second++;
      }
    }
  }

  struct Accumulator {
    std::vector<double> sums;
    std::vector<std::size_t> counts;
    int roster = 0;
  };
  std::map<ProfileKey, Accumulator> groups;
  for (const auto& player : players) {
    auto& acc = groups[{player.team, player.year}];
    if (acc.sums.empty()) {
      acc.sums.assign(retained.size(), 0.0);
      acc.counts.assign(retained.size(), 0);
    }
    acc.roster++;
    for (std::size_t i = 0; i < retained.size(); ++i) {
      if (const double* value = player.attribute(retained[i])) {
        acc.sums[i] += *value;
        acc.counts[i]++;
      }
    }
  }

  ProfileMap profiles;
  for (auto& [key, acc] : groups) {
    TeamProfile profile;
    profile.team = key.first;
    profile.year = key.second;
    profile.roster_size = acc.roster;
    profile.features.resize(retained.size());
    for (std::size_t i = 0; i < retained.size(); ++i) {
      if (acc.counts[i] > 0) {
        profile.features[i] = acc.sums[i] / static_cast<double>(acc.counts[i]);
        continue;
      }
      auto ys = year_sums.find({retained[i], key.second});
      if (ys != year_sums.end() && ys->second.second > 0) {
        profile.features[i] = ys->second.first / static_cast<double>(ys->second.second);
        continue;
      }
      auto as = all_sums.find(retained[i]);
      profile.features[i] =
          (as != all_sums.end() && as->second.second > 0)
              ? as->second.first / static_cast<double>(as->second.second)
              : 0.0;
    }
    profiles.emplace(key, std::move(profile));
  }
  return profiles;
}

}  // namespace footcast
