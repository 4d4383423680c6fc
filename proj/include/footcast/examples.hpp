#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "footcast/date.hpp"
#include "footcast/matrix.hpp"
#include "footcast/records.hpp"

namespace footcast {

enum class Winner : std::uint8_t { team_a = 0, team_b = 1 };

inline Winner flip(Winner w) {
  return w == Winner::team_a ? Winner::team_b : Winner::team_a;
}

struct RowProvenance {
  std::string match_id;
  bool swapped = false;  // true for the mirrored orientation
  Date date;
};

/// Labeled training examples: one row per match orientation,
/// [profile(A) | profile(B)] against the winning side. Draw matches
/// contribute no rows.
struct ExampleSet {
  Matrix matrix;
  std::vector<Winner> labels;
  std::vector<std::string> feature_names;
  std::vector<RowProvenance> provenance;

  std::size_t size() const { return labels.size(); }
  ExampleSet subset(std::span<const std::size_t> rows) const;
};

struct AssembleReport {
  std::size_t matches_in = 0;
  std::size_t matches_used = 0;
  std::size_t skipped_draws = 0;
  std::size_t skipped_missing_profile = 0;
};

/// Most recent profile for (team, year) scanning back at most fallback_depth
/// years; nullptr when none is found.
const TeamProfile* lookup_profile(const ProfileMap& profiles, const std::string& team,
                                  int year, int fallback_depth);

/// Each decisive match with both profiles resolvable becomes two rows, the
/// second with blocks and label swapped (symmetry augmentation).
ExampleSet assemble_examples(const std::vector<MatchRecord>& matches,
                             const ProfileMap& profiles,
                             const std::vector<std::string>& retained,
                             int year_fallback_depth,
                             AssembleReport* report = nullptr);

}  // namespace footcast
