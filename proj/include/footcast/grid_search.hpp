#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "footcast/classifier.hpp"
#include "footcast/config.hpp"
#include "footcast/folds.hpp"

namespace footcast {

/// Ordered hyperparameter axes for one family. Cells enumerate in declared
/// order with the first axis varying slowest, which fixes the tie-break order.
struct FamilyGrid {
  ModelFamily family = ModelFamily::logistic;
  std::vector<std::pair<std::string, std::vector<double>>> axes;

  std::vector<Hyperparams> cells() const;
};

FamilyGrid default_grid(ModelFamily family);
/// Reads grid.<family>.<axis> lists from the config, falling back to the
/// default grid axis by axis.
FamilyGrid grid_from_config(ModelFamily family, const RunConfig& config);

struct SearchSettings {
  std::vector<bool> pca_options = {false, true};  // searched jointly, off first
  double pca_variance_target = 0.95;
  double scaler_std_floor = 1e-12;
  std::uint64_t seed = 0;
};

struct GridCellResult {
  Hyperparams hyperparams;
  bool pca_on = false;
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
  std::vector<double> fold_log_losses;  // recorded for audit, never used to select
  double mean_log_loss = 0.0;
  bool valid = true;
};

struct GridSearchResult {
  ModelFamily family = ModelFamily::logistic;
  std::vector<GridCellResult> cells;
  std::size_t best_index = 0;

  const GridCellResult& best() const { return cells[best_index]; }
  /// Best valid cell restricted to one PCA option; nullopt when none is valid.
  std::optional<std::size_t> best_for_pca(bool pca_on) const;
};

/// Instrumentation record for one fit: the exact global row indices given to
/// the scaler/PCA/model fits and the rows the fold was scored on.
struct GridFitEvent {
  ModelFamily family;
  std::size_t cell_index;
  std::size_t fold;
  std::vector<std::size_t> fit_rows;
  std::vector<std::size_t> eval_rows;
};

using GridSearchObserver = std::function<void(const GridFitEvent&)>;

/// Per cell and fold: fit scaler (and PCA when the cell says so) on the
/// in-fold training rows only, fit the model, score accuracy on the held-out
/// fold. Cells whose training portion collapses to a single class are marked
/// invalid for parametric families; all cells invalid is an error.
GridSearchResult grid_search(ModelFamily family, const FamilyGrid& grid,
                             const ExampleSet& train, const FoldPlan& folds,
                             const SearchSettings& settings,
                             const GridSearchObserver& observer = {});

/// Stable per-fit seed: depends on the family and the cell's hyperparameter
/// values (not its position), so adding grid cells never reseeds others.
std::uint64_t cell_seed(std::uint64_t root, ModelFamily family,
                        const Hyperparams& params, bool pca_on);

}  // namespace footcast
