#include "footcast/classifier.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "footcast/adaboost.hpp"
#include "footcast/boosting.hpp"
#include "footcast/errors.hpp"
#include "footcast/forest.hpp"
#include "footcast/knn.hpp"
#include "footcast/logistic.hpp"

namespace footcast {

const char* to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::logistic: return "logistic";
    case ModelFamily::random_forest: return "random_forest";
    case ModelFamily::gradient_boost: return "gradient_boost";
    case ModelFamily::adaboost: return "adaboost";
    case ModelFamily::knn: return "knn";
  }
  return "logistic";
}

ModelFamily family_from_string(std::string_view name) {
  for (ModelFamily family : kAllFamilies) {
    if (name == to_string(family)) return family;
  }
  throw std::invalid_argument("unknown model family '" + std::string(name) + "'");
}

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void FittedClassifier::check_dimension(std::span<const double> x) const {
  if (x.size() != feature_count()) {
    std::ostringstream os;
    os << to_string(family()) << ": expected " << feature_count() << " features, got "
       << x.size();
    throw std::invalid_argument(os.str());
  }
}

namespace {

double param(const Hyperparams& params, const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

std::size_t count_param(const Hyperparams& params, const std::string& name,
                        std::size_t fallback) {
  const double v = param(params, name, static_cast<double>(fallback));
  if (!(v >= 1.0)) {
    throw std::invalid_argument("hyperparameter '" + name + "' must be at least 1");
  }
  return static_cast<std::size_t>(v);
}

void reject_unknown(const Hyperparams& params, const std::set<std::string>& known,
                    ModelFamily family) {
  for (const auto& [name, value] : params) {
    (void)value;
    if (!known.contains(name)) {
      throw std::invalid_argument(std::string("unknown hyperparameter '") + name +
                                  "' for " + to_string(family));
    }
  }
}

void require_both_classes(const std::vector<Winner>& y, ModelFamily family) {
  bool has_a = false;
  bool has_b = false;
  for (Winner w : y) {
    (w == Winner::team_a ? has_a : has_b) = true;
    if (has_a && has_b) return;
  }
  throw std::invalid_argument(std::string(to_string(family)) +
                              ": training labels hold a single class");
}

}  // namespace

std::unique_ptr<FittedClassifier> fit_classifier(const ClassifierSpec& spec,
                                                 const Matrix& X,
                                                 const std::vector<Winner>& y) {
  switch (spec.family) {
    case ModelFamily::logistic: {
      reject_unknown(spec.hyperparams, {"lambda", "learning_rate", "max_iterations", "tol"},
                     spec.family);
      require_both_classes(y, spec.family);
      return LogisticModel::fit(X, y, param(spec.hyperparams, "lambda", 0.1),
                                param(spec.hyperparams, "learning_rate", 0.5),
                                count_param(spec.hyperparams, "max_iterations", 500),
                                param(spec.hyperparams, "tol", 1e-6));
    }
    case ModelFamily::random_forest: {
      reject_unknown(spec.hyperparams, {"trees", "depth"}, spec.family);
      require_both_classes(y, spec.family);
      return RandomForestModel::fit(X, y, count_param(spec.hyperparams, "trees", 100),
                                    count_param(spec.hyperparams, "depth", 8), spec.seed);
    }
    case ModelFamily::gradient_boost: {
      reject_unknown(spec.hyperparams, {"rounds", "eta", "depth"}, spec.family);
      require_both_classes(y, spec.family);
      return GradientBoostModel::fit(X, y, count_param(spec.hyperparams, "rounds", 100),
                                     param(spec.hyperparams, "eta", 0.1),
                                     count_param(spec.hyperparams, "depth", 3));
    }
    case ModelFamily::adaboost: {
      reject_unknown(spec.hyperparams, {"rounds"}, spec.family);
      require_both_classes(y, spec.family);
      return AdaBoostModel::fit(X, y, count_param(spec.hyperparams, "rounds", 100));
    }
    case ModelFamily::knn: {
      reject_unknown(spec.hyperparams, {"k"}, spec.family);
      return KnnModel::fit(X, y, count_param(spec.hyperparams, "k", 5));
    }
  }
  throw std::invalid_argument("unknown model family tag");
}

std::unique_ptr<FittedClassifier> deserialize_classifier(BinaryReader& in) {
  const auto family = static_cast<ModelFamily>(in.get_u8());
  switch (family) {
    case ModelFamily::logistic: return LogisticModel::deserialize(in);
    case ModelFamily::random_forest: return RandomForestModel::deserialize(in);
    case ModelFamily::gradient_boost: return GradientBoostModel::deserialize(in);
    case ModelFamily::adaboost: return AdaBoostModel::deserialize(in);
    case ModelFamily::knn: return KnnModel::deserialize(in);
  }
  throw DataError("unknown classifier tag in bundle");
}

}  // namespace footcast
