#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "footcast/classifier.hpp"
#include "footcast/grid_search.hpp"
#include "footcast/pca.hpp"
#include "footcast/records.hpp"
#include "footcast/scaler.hpp"

namespace footcast {

inline constexpr std::uint16_t kBundleFormatMajor = 1;
inline constexpr std::uint16_t kBundleFormatMinor = 1;

/// Everything standalone inference needs: preprocessing, the five fitted
/// classifiers, the retained attribute list, the profile map, the alias
/// snapshot and the run configuration that produced it.
struct EnsembleBundle {
  std::uint16_t format_major = kBundleFormatMajor;
  std::uint16_t format_minor = kBundleFormatMinor;
  Scaler scaler;
  std::optional<PcaModel> pca;
  std::array<std::unique_ptr<FittedClassifier>, 5> classifiers;  // kAllFamilies order
  std::vector<std::string> retained_attributes;
  ProfileMap profiles;
  std::map<std::string, std::string> aliases;
  std::map<std::string, std::string> config_snapshot;
  std::uint64_t seed = 0;
  int year_fallback_depth = 2;

  /// Width the classifiers consume: post-PCA when present, post-scaler else.
  std::size_t input_dimension() const;
  /// Raw assembled feature vector -> classifier input.
  std::vector<double> preprocess(std::span<const double> raw) const;
};

struct TrainSettings {
  std::size_t k_folds = 5;
  bool stratified = true;
  SearchSettings search;
  int year_fallback_depth = 2;
};

struct TrainOutcome {
  EnsembleBundle bundle;
  std::array<GridSearchResult, 5> searches;  // kAllFamilies order
  bool pca_chosen = false;
  std::array<std::size_t, 5> chosen_cells{};  // index into searches[i].cells
};

/// Cross-validated grid search for all five families, a single bundle-level
/// PCA on/off decision (the option with the higher mean of per-family best
/// fold accuracies; ties keep PCA off), then final refits on the full
/// training set with each family's best hyperparameters for that option.
TrainOutcome train_ensemble(const ExampleSet& train,
                            const std::array<FamilyGrid, 5>& grids,
                            const TrainSettings& settings, ProfileMap profiles,
                            std::vector<std::string> retained_attributes,
                            std::map<std::string, std::string> aliases,
                            std::map<std::string, std::string> config_snapshot);

/// Versioned, checksummed container: a plain-text header, a JSON metadata
/// block and a little-endian binary payload (format documented in the README).
void save_bundle(const EnsembleBundle& bundle, const std::string& path);

/// Rejects unknown major versions, truncation and checksum mismatches with an
/// error naming the failure; older minor versions load with defaulted fields.
EnsembleBundle load_bundle(const std::string& path);

}  // namespace footcast
