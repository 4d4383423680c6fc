#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "footcast/binio.hpp"
#include "footcast/examples.hpp"
#include "footcast/matrix.hpp"

namespace footcast {

enum class ModelFamily : std::uint8_t {
  logistic = 0,
  random_forest = 1,
  gradient_boost = 2,
  adaboost = 3,
  knn = 4,
};

inline constexpr std::array<ModelFamily, 5> kAllFamilies = {
    ModelFamily::logistic, ModelFamily::random_forest, ModelFamily::gradient_boost,
    ModelFamily::adaboost, ModelFamily::knn};

const char* to_string(ModelFamily family);
ModelFamily family_from_string(std::string_view name);

using Hyperparams = std::map<std::string, double>;

struct ClassifierSpec {
  ModelFamily family = ModelFamily::logistic;
  Hyperparams hyperparams;
  std::uint64_t seed = 0;
};

/// Two class probabilities; team_b is always computed as 1 - team_a.
struct ProbPair {
  double team_a = 0.5;
  double team_b = 0.5;
};

/// Row-level class pick; an exact probability tie goes to team_b.
inline Winner pick_from(const ProbPair& p) {
  return p.team_a > p.team_b ? Winner::team_a : Winner::team_b;
}

/// Uniform contract over the five model families. Fitted models are immutable
/// and predict_proba is reentrant.
class FittedClassifier {
 public:
  virtual ~FittedClassifier() = default;

  virtual ModelFamily family() const = 0;
  virtual std::size_t feature_count() const = 0;
  virtual ProbPair predict_proba(std::span<const double> x) const = 0;
  virtual void serialize(BinaryWriter& out) const = 0;

 protected:
  /// Throws std::invalid_argument on dimension mismatch.
  void check_dimension(std::span<const double> x) const;
};

/// Fits one classifier. Deterministic given (spec, X, y): every stochastic
/// element derives from spec.seed. Parametric families require both classes
/// present; k-NN only stores the data.
std::unique_ptr<FittedClassifier> fit_classifier(const ClassifierSpec& spec,
                                                 const Matrix& X,
                                                 const std::vector<Winner>& y);

std::unique_ptr<FittedClassifier> deserialize_classifier(BinaryReader& in);

/// Numerically safe sigmoid.
double sigmoid(double z);

}  // namespace footcast
