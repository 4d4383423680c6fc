#pragma once

#include <string>
#include <utility>
#include <vector>

#include "footcast/records.hpp"

namespace footcast {

struct SelectionOptions {
  double completeness_min = 0.5;  // minimum fraction of players with the attribute
  double corr_max = 0.95;         // drop the later attribute of any pair above this
  std::vector<std::string> allowlist;  // empty = all attributes are candidates
};

struct SelectionReport {
  std::vector<std::string> dropped_disallowed;
  std::vector<std::string> dropped_incomplete;
  std::vector<std::pair<std::string, std::string>> dropped_correlated;  // (dropped, kept)
};

/// Applies the allow-list, then the completeness floor, then greedy
/// redundancy pruning in declared attribute order: the later attribute of any
/// pair with |Pearson r| > corr_max is dropped. Throws ConfigError when
/// nothing survives.
std::vector<std::string> select_attributes(const std::vector<PlayerRecord>& players,
                                           const std::vector<std::string>& attribute_names,
                                           const SelectionOptions& options,
                                           SelectionReport* report = nullptr);

/// Pearson correlation over pairwise-complete observations; 0 when fewer than
/// two complete pairs or either side is constant.
double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace footcast
