#include "footcast/feature_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "footcast/errors.hpp"

namespace footcast {

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = std::min(xs.size(), ys.size());
  std::size_t pairs = 0;
  double sum_x = 0.0, sum_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(xs[i]) || std::isnan(ys[i])) continue;
    pairs++;
    sum_x += xs[i];
    sum_y += ys[i];
  }
  if (pairs < 2) return 0.0;
  const double mean_x = sum_x / static_cast<double>(pairs);
  const double mean_y = sum_y / static_cast<double>(pairs);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(xs[i]) || std::isnan(ys[i])) continue;
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::string> select_attributes(const std::vector<PlayerRecord>& players,
                                           const std::vector<std::string>& attribute_names,
                                           const SelectionOptions& options,
                                           SelectionReport* report) {
  SelectionReport local;
  SelectionReport& rep = report ? *report : local;

  std::vector<std::string> candidates;
  for (const auto& name : attribute_names) {
    if (!options.allowlist.empty() &&
        std::find(options.allowlist.begin(), options.allowlist.end(), name) ==
            options.allowlist.end()) {
      rep.dropped_disallowed.push_back(name);
      continue;
    }
    candidates.push_back(name);
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> series(candidates.size(),
                                          std::vector<double>(players.size(), nan));
  std::vector<std::size_t> present(candidates.size(), 0);
  for (std::size_t p = 0; p < players.size(); ++p) {
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (const double* value = players[p].attribute(candidates[a])) {
        series[a][p] = *value;
        present[a]++;
      }
    }
  }

  std::vector<std::string> complete;
  std::vector<std::vector<double>> complete_series;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const double fraction =
        players.empty() ? 0.0
                        : static_cast<double>(present[a]) / static_cast<double>(players.size());
    if (fraction < options.completeness_min) {
      rep.dropped_incomplete.push_back(candidates[a]);
      continue;
    }
    complete.push_back(candidates[a]);
    complete_series.push_back(std::move(series[a]));
  }

  std::vector<std::string> retained;
  std::vector<std::size_t> retained_idx;
  for (std::size_t a = 0; a < complete.size(); ++a) {
    bool redundant = false;
    for (std::size_t k : retained_idx) {
      const double r = pearson_correlation(complete_series[k], complete_series[a]);
      if (std::abs(r) > options.corr_max) {
        rep.dropped_correlated.emplace_back(complete[a], complete[k]);
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    retained.push_back(complete[a]);
    retained_idx.push_back(a);
  }

  if (retained.empty()) {
    throw ConfigError("attribute selection removed every attribute");
  }
  return retained;
}

}  // namespace footcast
