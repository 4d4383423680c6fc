#pragma once

#include <string>
#include <vector>

#include "footcast/records.hpp"

namespace footcast {

enum class Imputation { year_global_mean };

/// Aggregates player rows into per-(team, year) profiles. Each feature is the
/// arithmetic mean of the roster's present values; an attribute absent for the
/// whole roster is imputed with that year's global attribute mean (falling
/// back to the all-years mean, then 0, when the year has no values at all).
/// A (team, year) with zero players emits no profile.
ProfileMap build_team_profiles(const std::vector<PlayerRecord>& players,
                               const std::vector<std::string>& retained,
                               Imputation imputation = Imputation::year_global_mean);

}  // namespace footcast
