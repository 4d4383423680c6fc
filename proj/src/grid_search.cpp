#include "footcast/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "footcast/errors.hpp"
#include "footcast/pca.hpp"
#include "footcast/rng.hpp"
#include "footcast/scaler.hpp"

namespace footcast {

std::vector<Hyperparams> FamilyGrid::cells() const {
  std::vector<Hyperparams> out{Hyperparams{}};
  for (const auto& [name, values] : axes) {
    if (values.empty()) {
      throw ConfigError("grid axis '" + name + "' has no values");
    }
    std::vector<Hyperparams> expanded;
    expanded.reserve(out.size() * values.size());
    for (const Hyperparams& base : out) {
      for (double v : values) {
        Hyperparams cell = base;
        cell[name] = v;
        expanded.push_back(std::move(cell));
      }
    }
    out = std::move(expanded);
  }
  return out;
}

FamilyGrid default_grid(ModelFamily family) {
  FamilyGrid grid;
  grid.family = family;
  switch (family) {
    case ModelFamily::logistic:
      grid.axes = {{"lambda", {0.01, 0.1, 1.0}}};
      break;
    case ModelFamily::random_forest:
      grid.axes = {{"trees", {50, 200}}, {"depth", {4, 8}}};
      break;
    case ModelFamily::gradient_boost:
      grid.axes = {{"rounds", {50, 200}}, {"eta", {0.05, 0.1}}, {"depth", {2, 3}}};
      break;
    case ModelFamily::adaboost:
      grid.axes = {{"rounds", {50, 200}}};
      break;
    case ModelFamily::knn:
      grid.axes = {{"k", {5, 15, 31}}};
      break;
  }
  return grid;
}

FamilyGrid grid_from_config(ModelFamily family, const RunConfig& config) {
  FamilyGrid grid = default_grid(family);
  for (auto& [axis, values] : grid.axes) {
    const std::string key = std::string("grid.") + to_string(family) + "." + axis;
    values = config.get_double_list(key, values);
  }
  return grid;
}

std::optional<std::size_t> GridSearchResult::best_for_pca(bool pca_on) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].valid || cells[i].pca_on != pca_on) continue;
    if (!best || cells[i].mean_accuracy > cells[*best].mean_accuracy) best = i;
  }
  return best;
}

std::uint64_t cell_seed(std::uint64_t root, ModelFamily family, const Hyperparams& params,
                        bool pca_on) {
  std::ostringstream scope;
  scope << "fit/" << to_string(family);
  for (const auto& [name, value] : params) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    scope << '/' << name << '=' << buf;
  }
  scope << "/pca=" << (pca_on ? 1 : 0);
  return derive_seed(root, scope.str());
}

GridSearchResult grid_search(ModelFamily family, const FamilyGrid& grid,
                             const ExampleSet& train, const FoldPlan& folds,
                             const SearchSettings& settings,
                             const GridSearchObserver& observer) {
  const std::vector<Hyperparams> cells = grid.cells();
  if (cells.empty()) throw ConfigError("empty hyperparameter grid");

  GridSearchResult result;
  result.family = family;

  for (bool pca_on : settings.pca_options) {
    for (const Hyperparams& params : cells) {
      const std::size_t cell_index = result.cells.size();
      GridCellResult cell;
      cell.hyperparams = params;
      cell.pca_on = pca_on;

      for (std::size_t f = 0; f < folds.k && cell.valid; ++f) {
        const std::vector<std::size_t> fit_rows = folds.complement_rows(f);
        const std::vector<std::size_t> eval_rows = folds.fold_rows(f);
        if (observer) observer({family, cell_index, f, fit_rows, eval_rows});

        std::vector<Winner> fit_labels;
        fit_labels.reserve(fit_rows.size());
        for (std::size_t r : fit_rows) fit_labels.push_back(train.labels[r]);
        if (family != ModelFamily::knn) {
          const bool has_a = std::count(fit_labels.begin(), fit_labels.end(),
                                        Winner::team_a) > 0;
          const bool has_b = fit_labels.size() >
                             static_cast<std::size_t>(std::count(
                                 fit_labels.begin(), fit_labels.end(), Winner::team_a));
          if (!has_a || !has_b) {
            cell.valid = false;
            break;
          }
        }

        const Matrix fit_raw = train.matrix.select_rows(fit_rows);
        const Scaler scaler = Scaler::fit(fit_raw, settings.scaler_std_floor);
        Matrix fit_X = scaler.apply(fit_raw);
        std::optional<PcaModel> pca;
        if (pca_on) {
          pca = fit_pca(fit_X, settings.pca_variance_target);
          fit_X = pca->transform(fit_X);
        }

        ClassifierSpec spec;
        spec.family = family;
        spec.hyperparams = params;
        spec.seed = derive_seed(cell_seed(settings.seed, family, params, pca_on),
                                "fold/" + std::to_string(f));
        const auto model = fit_classifier(spec, fit_X, fit_labels);

        std::size_t correct = 0;
        double log_loss = 0.0;
        for (std::size_t r : eval_rows) {
          std::vector<double> x = scaler.apply(train.matrix.row(r));
          if (pca) x = pca->transform(x);
          const ProbPair p = model->predict_proba(x);
          if (pick_from(p) == train.labels[r]) correct++;
          const double p_true = train.labels[r] == Winner::team_a ? p.team_a : p.team_b;
          log_loss += -std::log(std::min(std::max(p_true, 1e-15), 1.0 - 1e-15));
        }
        cell.fold_accuracies.push_back(static_cast<double>(correct) /
                                       static_cast<double>(eval_rows.size()));
        cell.fold_log_losses.push_back(log_loss / static_cast<double>(eval_rows.size()));
      }

      if (cell.valid) {
        double acc_sum = 0.0;
        double ll_sum = 0.0;
        for (double a : cell.fold_accuracies) acc_sum += a;
        for (double l : cell.fold_log_losses) ll_sum += l;
        cell.mean_accuracy = acc_sum / static_cast<double>(cell.fold_accuracies.size());
        cell.mean_log_loss = ll_sum / static_cast<double>(cell.fold_log_losses.size());
      } else {
        cell.fold_accuracies.clear();
        cell.fold_log_losses.clear();
      }
      result.cells.push_back(std::move(cell));
    }
  }

  bool any_valid = false;
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const GridCellResult& cell = result.cells[i];
    if (!cell.valid) continue;
    if (!any_valid || cell.mean_accuracy > result.cells[result.best_index].mean_accuracy) {
      result.best_index = i;
      any_valid = true;
    }
  }
  if (!any_valid) {
    throw DataError(std::string("every grid cell invalid for ") + to_string(family) +
                    ": a fold's training portion holds a single class");
  }
  return result;
}

}  // namespace footcast
