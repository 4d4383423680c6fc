// Acceptance gate: every release-blocking behavior as one pass/fail line.
// Exits nonzero when any criterion fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "footcast/baseline.hpp"
#include "footcast/bundle.hpp"
#include "footcast/errors.hpp"
#include "footcast/evaluation.hpp"
#include "footcast/examples.hpp"
#include "footcast/feature_select.hpp"
#include "footcast/folds.hpp"
#include "footcast/grid_search.hpp"
#include "footcast/knn.hpp"
#include "footcast/logistic.hpp"
#include "footcast/pca.hpp"
#include "footcast/predictor.hpp"
#include "footcast/profiles.hpp"
#include "footcast/rng.hpp"
#include "footcast/tournament.hpp"
#include "support/synthetic.hpp"

using namespace footcast;
namespace fs = std::filesystem;

namespace {

const std::string kData = FOOTCAST_TEST_DATA_DIR;
const std::string kShare = FOOTCAST_SHARE_DIR;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

void require_near(double actual, double expected, double tol, const std::string& what) {
  if (!(std::abs(actual - expected) <= tol)) {
    throw Failure(what + ": got " + std::to_string(actual) + ", want " +
                  std::to_string(expected) + " within " + std::to_string(tol));
  }
}

template <typename Fn>
void require_rejected(Fn&& fn, const char* needle, const std::string& what) {
  try {
    fn();
  } catch (const DataError& err) {
    require(std::string(err.what()).find(needle) != std::string::npos,
            what + ": unexpected message '" + std::string(err.what()) + "'");
    return;
  }
  throw Failure(what + ": accepted instead of rejected");
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// n_matches decisive matches, two mirrored rows each, labels alternating
/// between the sides so both classes are always present.
ExampleSet make_examples(std::size_t n_matches, std::size_t width, std::uint64_t seed,
                         double gap = 1.0) {
  ExampleSet set;
  set.matrix = Matrix(2 * n_matches, width);
  Rng rng(seed);
  for (std::size_t m = 0; m < n_matches; ++m) {
    const bool a_wins = m % 2 == 0;
    std::vector<double> row(width);
    for (auto& v : row) v = rng.next_gaussian() + (a_wins ? gap : -gap);

    for (int orientation = 0; orientation < 2; ++orientation) {
      const std::size_t r = 2 * m + std::size_t(orientation);
      for (std::size_t c = 0; c < width; ++c) {
        set.matrix(r, c) = orientation == 0 ? row[c] : -row[c];
      }
      const Winner label = a_wins ? Winner::team_a : Winner::team_b;
      set.labels.push_back(orientation == 0 ? label : flip(label));
      RowProvenance p;
      p.match_id = "m" + std::to_string(m);
      p.swapped = orientation == 1;
      p.date = {2020, 1 + int(m % 12), 1 + int(m % 28)};
      set.provenance.push_back(p);
    }
  }
  for (std::size_t c = 0; c < width; ++c) {
    set.feature_names.push_back("f" + std::to_string(c));
  }
  return set;
}

std::array<FamilyGrid, 5> small_grids() {
  return {FamilyGrid{ModelFamily::logistic, {{"lambda", {0.1}}}},
          FamilyGrid{ModelFamily::random_forest, {{"trees", {15}}, {"depth", {4}}}},
          FamilyGrid{ModelFamily::gradient_boost,
                     {{"rounds", {20}}, {"eta", {0.1}}, {"depth", {2}}}},
          FamilyGrid{ModelFamily::adaboost, {{"rounds", {20}}}},
          FamilyGrid{ModelFamily::knn, {{"k", {5}}}}};
}

EnsembleBundle train_world(const synthetic::World& world,
                           const std::array<FamilyGrid, 5>& grids, std::uint64_t seed) {
  SelectionReport report;
  const auto retained =
      select_attributes(world.players, world.attribute_names, SelectionOptions{}, &report);
  const auto profiles = build_team_profiles(world.players, retained);
  const ExampleSet examples = assemble_examples(world.history, profiles, retained, 2);
  TrainSettings settings;
  settings.search.seed = seed;
  return train_ensemble(examples, grids, settings, profiles, retained, {}, {}).bundle;
}

/// Shared small fixture for the contract criteria that only need a working
/// bundle, not a statistically strong one.
struct SmallFixture {
  synthetic::World world;
  EnsembleBundle bundle;
};

const SmallFixture& small_fixture() {
  static const SmallFixture fixture = [] {
    synthetic::WorldOptions options;
    options.seed = 31;
    options.history_matches = 240;
    options.holdout_matches = 20;
    SmallFixture f;
    f.world = synthetic::make_world(options);
    f.bundle = train_world(f.world, small_grids(), 13);
    return f;
  }();
  return fixture;
}

// ---------------------------------------------------------------------------

void criterion_golden_ledger() {
  const auto ledger = read_ledger(kData + "/golden_ledger.tsv");
  require(ledger.size() == 64, "ledger must hold 64 matches");
  const EvaluationReport report = compute_report(ledger, 4);

  require(format_pct(report.overall_accuracy_model) == "59.38",
          "model overall accuracy must print 59.38");
  require(format_pct(report.overall_accuracy_baseline) == "56.25",
          "baseline overall accuracy must print 56.25");
  require(report.high_count == 16, "high-scoring bucket must hold 16 matches");
  require(report.low_count == 48, "low-scoring bucket must hold 48 matches");
  require(format_pct(report.high_scoring_accuracy_model.value()) == "81.25",
          "model high-scoring accuracy must print 81.25");
  require(format_pct(report.high_scoring_accuracy_baseline.value()) == "81.25",
          "baseline high-scoring accuracy must print 81.25");
  require(format_pct(report.low_scoring_accuracy_model.value()) == "52.08",
          "model low-scoring accuracy must print 52.08");
  require(format_pct(report.low_scoring_accuracy_baseline.value()) == "47.92",
          "baseline low-scoring accuracy must print 47.92");
  require(report.challenging_case_count == 28, "must find 28 challenging cases");
  require(format_pct(report.challenging_case_model_accuracy.value()) == "25.00",
          "challenging-case accuracy must print 25.00");
}

void criterion_wwr() {
  require_near(wwr({0, 0.0, 5, 0.37}), 0.37, 1e-12, "v=0 must return the overall ratio");
  require_near(wwr({7, 0.6, 7, 0.2}), 0.4, 1e-12, "v=m must return the midpoint");
  require_near(wwr({3, 2.0 / 3.0, 5, 0.5}), 0.5625, 1e-12, "hand-checked blend");

  double previous = wwr({0, 0.8, 5, 0.3});
  for (long long v = 1; v <= 200; ++v) {
    const double current = wwr({v, 0.8, 5, 0.3});
    require(current > previous, "wwr must increase with evidence when R > C");
    previous = current;
  }
  previous = wwr({0, 0.1, 5, 0.9});
  for (long long v = 1; v <= 200; ++v) {
    const double current = wwr({v, 0.1, 5, 0.9});
    require(current < previous, "wwr must decrease with evidence when R < C");
    previous = current;
  }
  require(std::abs(wwr({1000000, 0.8, 5, 0.3}) - 0.8) < 1e-5,
          "wwr must converge to R as evidence grows");
}

void criterion_baseline_symmetry() {
  Rng rng(404);
  const MatchContext contexts[] = {MatchContext::world_cup, MatchContext::continental,
                                   MatchContext::friendly, MatchContext::other};
  for (int trial = 0; trial < 1000; ++trial) {
    const int team_count = 3 + int(rng.next_below(6));
    std::vector<std::string> teams;
    for (int t = 0; t < team_count; ++t) teams.push_back("T" + std::to_string(t));

    std::vector<MatchRecord> history;
    const std::size_t n = 5 + rng.next_below(36);
    for (std::size_t i = 0; i < n; ++i) {
      MatchRecord match;
      match.match_id = "h" + std::to_string(i);
      match.date = {2015 + int(rng.next_below(7)), 1 + int(rng.next_below(12)),
                    1 + int(rng.next_below(28))};
      const std::size_t home = rng.next_below(std::uint64_t(team_count));
      std::size_t away;
      do {
        away = rng.next_below(std::uint64_t(team_count));
      } while (away == home);
      match.home_team = teams[home];
      match.away_team = teams[away];
      match.home_goals = int(rng.next_below(5));
      match.away_goals = int(rng.next_below(5));
      match.context = contexts[rng.next_below(4)];
      history.push_back(match);
    }

    BaselineOptions options;
    options.m = 1 + int(rng.next_below(6));
    if (rng.next_unit() < 0.25) options.context_filter = contexts[rng.next_below(4)];

    const std::size_t xi = rng.next_below(std::uint64_t(team_count));
    std::size_t yi;
    do {
      yi = rng.next_below(std::uint64_t(team_count));
    } while (yi == xi);
    const Date cutoff = {2022, 1, 1};
    const std::string forward =
        baseline_predict(history, teams[xi], teams[yi], cutoff, options);
    const std::string backward =
        baseline_predict(history, teams[yi], teams[xi], cutoff, options);
    require(forward == backward,
            "baseline pick depends on argument order (trial " + std::to_string(trial) +
                ": " + forward + " vs " + backward + ")");
  }
}

void criterion_pca() {
  Rng rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 20, d = 6;
    Matrix X(n, d);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        X(r, c) = rng.next_gaussian() * double(c + 1);
      }
    }
    const PcaModel pca = fit_pca(X, 1.0);
    require(pca.retained() == d, "full-variance fit must keep every component");

    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        double dot = 0.0;
        for (std::size_t c = 0; c < d; ++c) dot += pca.components(i, c) * pca.components(j, c);
        require_near(dot, i == j ? 1.0 : 0.0, 1e-8, "components must be orthonormal");
      }
    }

    const Matrix reconstructed = pca.inverse_transform(pca.transform(X));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        require_near(reconstructed(r, c), X(r, c), 1e-8, "full-rank reconstruction");
      }
    }

    // Independent oracle: dense eigensolve of the sample covariance.
    Eigen::MatrixXd centered(n, d);
    for (std::size_t c = 0; c < d; ++c) {
      double mean = 0.0;
      for (std::size_t r = 0; r < n; ++r) mean += X(r, c);
      mean /= double(n);
      for (std::size_t r = 0; r < n; ++r) centered(long(r), long(c)) = X(r, c) - mean;
    }
    const Eigen::MatrixXd covariance =
        centered.transpose() * centered / double(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
    require(solver.info() == Eigen::Success, "oracle eigensolve failed");
    for (std::size_t i = 0; i < d; ++i) {
      require_near(pca.explained_variance[i], solver.eigenvalues()[long(d - 1 - i)], 1e-8,
                   "eigenvalue " + std::to_string(i) + " must match the dense oracle");
    }
  }
}

void criterion_logistic_gradient() {
  Rng rng(23);
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t n = 8 + rng.next_below(20);
    const std::size_t d = 1 + rng.next_below(5);
    Matrix X(n, d);
    std::vector<Winner> y(n);
    for (std::size_t r = 0; r < n; ++r) {
      y[r] = rng.next_unit() < 0.5 ? Winner::team_a : Winner::team_b;
      for (std::size_t c = 0; c < d; ++c) X(r, c) = rng.next_range(-2, 2);
    }
    std::vector<double> w(d);
    for (auto& v : w) v = rng.next_range(-1, 1);
    const double b = rng.next_range(-1, 1);
    const double lambda = rng.next_unit();

    const LogisticObjective objective{X, y, lambda};
    std::vector<double> grad(d);
    double grad_b = 0.0;
    objective.gradient(w, b, grad, grad_b);

    const double h = 1e-6;
    for (std::size_t j = 0; j <= d; ++j) {
      double plus, minus;
      if (j < d) {
        auto wp = w; wp[j] += h;
        auto wm = w; wm[j] -= h;
        plus = objective.loss(wp, b);
        minus = objective.loss(wm, b);
      } else {
        plus = objective.loss(w, b + h);
        minus = objective.loss(w, b - h);
      }
      const double numeric = (plus - minus) / (2 * h);
      const double analytic = j < d ? grad[j] : grad_b;
      const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-8});
      require(std::abs(numeric - analytic) / scale < 1e-4,
              "gradient coordinate " + std::to_string(j) + " disagrees with finite differences");
    }
  }
}

void criterion_knn_oracle() {
  Matrix X(80, 4);
  std::vector<Winner> y(80);
  Rng data_rng(67);
  for (std::size_t r = 0; r < 80; ++r) {
    const bool is_a = r % 2 == 0;
    y[r] = is_a ? Winner::team_a : Winner::team_b;
    for (std::size_t c = 0; c < 4; ++c) {
      X(r, c) = data_rng.next_gaussian() + (is_a ? 0.4 : -0.4);
    }
  }
  const std::size_t k = 7;
  const auto model = KnnModel::fit(X, y, k);

  Rng rng(68);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> q(4);
    for (auto& v : q) v = rng.next_range(-3, 3);

    std::vector<std::pair<double, std::size_t>> distances;
    for (std::size_t r = 0; r < 80; ++r) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < 4; ++c) {
        const double diff = X(r, c) - q[c];
        d2 += diff * diff;
      }
      distances.emplace_back(d2, r);
    }
    std::sort(distances.begin(), distances.end());
    std::size_t a_count = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[distances[j].second] == Winner::team_a) ++a_count;
    }
    require(model->predict_proba(q).team_a == double(a_count) / double(k),
            "query " + std::to_string(i) + " disagrees with the exhaustive oracle");
  }
}

void criterion_fold_integrity() {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n_matches = 2 + rng.next_below(39);
    const std::size_t width = 1 + rng.next_below(6);
    const std::size_t k = 2 + rng.next_below(std::min<std::uint64_t>(7, n_matches - 1));
    const bool stratified = rng.next_unit() < 0.5;
    const ExampleSet set = make_examples(n_matches, width, 1000 + std::uint64_t(trial));
    const FoldPlan plan = plan_folds(set, k, rng.next_below(1u << 30), stratified);

    require(plan.assignments.size() == set.size(), "every row must have a fold");
    std::vector<std::size_t> seen(set.size(), 0);
    for (std::size_t fold = 0; fold < k; ++fold) {
      for (const std::size_t row : plan.fold_rows(fold)) {
        require(plan.assignments[row] == fold, "fold_rows must match assignments");
        seen[row]++;
      }
    }
    for (const std::size_t count : seen) {
      require(count == 1, "folds must partition the rows exactly");
    }

    // A match's two orientations always share a fold.
    std::map<std::string, std::size_t> fold_of;
    std::map<std::string, Winner> stratum_of;
    for (std::size_t row = 0; row < set.size(); ++row) {
      const auto& p = set.provenance[row];
      const auto it = fold_of.find(p.match_id);
      if (it == fold_of.end()) {
        fold_of[p.match_id] = plan.assignments[row];
      } else {
        require(it->second == plan.assignments[row],
                "match " + p.match_id + " is torn across folds");
      }
      if (!p.swapped) stratum_of[p.match_id] = set.labels[row];
    }

    // Match counts balance within one, per stratum when stratified.
    std::map<Winner, std::vector<std::size_t>> counts;
    counts[Winner::team_a].assign(k, 0);
    counts[Winner::team_b].assign(k, 0);
    for (const auto& [match_id, fold] : fold_of) {
      counts[stratified ? stratum_of[match_id] : Winner::team_a][fold]++;
    }
    for (const auto& [stratum, per_fold] : counts) {
      const auto [lo, hi] = std::minmax_element(per_fold.begin(), per_fold.end());
      if (!stratified && stratum == Winner::team_b) continue;
      require(*hi - *lo <= 1, "fold match counts must balance within one");
    }
  }
}

void criterion_no_leakage() {
  const ExampleSet set = make_examples(30, 3, 77);
  const FoldPlan plan = plan_folds(set, 4, 99, true);
  FamilyGrid grid{ModelFamily::logistic, {{"lambda", {0.01, 0.1}}}};
  SearchSettings settings;
  settings.seed = 5;

  std::size_t events = 0;
  const auto observer = [&](const GridFitEvent& event) {
    events++;
    const std::set<std::size_t> fit(event.fit_rows.begin(), event.fit_rows.end());
    const auto eval_rows = plan.fold_rows(event.fold);
    require(std::set<std::size_t>(event.eval_rows.begin(), event.eval_rows.end()) ==
                std::set<std::size_t>(eval_rows.begin(), eval_rows.end()),
            "scored rows must be exactly the held-out fold");
    for (const std::size_t row : event.eval_rows) {
      require(fit.count(row) == 0, "held-out row " + std::to_string(row) +
                                       " entered a fit call for its own fold");
    }
    const auto complement = plan.complement_rows(event.fold);
    require(fit == std::set<std::size_t>(complement.begin(), complement.end()),
            "fit must see the full complement of the held-out fold");
  };
  const GridSearchResult result = grid_search(ModelFamily::logistic, grid, set, plan,
                                              settings, observer);
  require(events == 2 * 2 * 4, "expected one event per cell, pca option and fold");
  require(result.cells.size() == 4, "two cells times two pca options");
}

void criterion_ensemble_contract() {
  const auto& f = small_fixture();
  const auto& teams = f.world.teams;

  // Same inputs, same seed: the saved bundles must be byte-identical.
  EnsembleBundle again = train_world(f.world, small_grids(), 13);
  const std::string path_a = temp_path("acceptance_bundle_a.bin");
  const std::string path_b = temp_path("acceptance_bundle_b.bin");
  save_bundle(f.bundle, path_a);
  save_bundle(again, path_b);
  require(read_bytes(path_a) == read_bytes(path_b),
          "two identical seeded training runs must serialize identically");

  Rng rng(707);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t ai = rng.next_below(32);
    std::size_t bi;
    do {
      bi = rng.next_below(32);
    } while (bi == ai);
    const int year = 2016 + int(rng.next_below(7));

    const PredictionResult result = predict_match(f.bundle, teams[ai], teams[bi], year);
    for (const ProbPair& pair : result.per_family) {
      require(std::abs(pair.team_a + pair.team_b - 1.0) <= 1e-12,
              "family probabilities must sum to one");
    }
    require(result.votes_for_winner >= 3, "winner must carry at least three votes");
    int votes = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      const bool for_winner =
          (result.winner == result.team_a) == result.votes_for_a[i];
      if (for_winner) votes++;
    }
    require(votes == result.votes_for_winner, "vote record must match the tally");

    const PredictionResult swapped = predict_match(f.bundle, teams[bi], teams[ai], year);
    require(swapped.winner == result.winner, "winner must not depend on argument order");
    require(swapped.win_probability == result.win_probability,
            "probability must not depend on argument order");

    const PredictionResult repeat = predict_match(again, teams[ai], teams[bi], year);
    require(render_prediction(repeat, true) == render_prediction(result, true),
            "identical bundles must render identical predictions");
  }
}

void criterion_synthetic_end_to_end() {
  const auto started = std::chrono::steady_clock::now();

  synthetic::WorldOptions options;
  options.seed = 4242;
  const synthetic::World world = synthetic::make_world(options);
  require(world.holdout.size() == 200, "holdout must hold 200 matches");

  const std::array<FamilyGrid, 5> grids = {
      FamilyGrid{ModelFamily::logistic, {{"lambda", {0.01, 0.1, 1.0}}}},
      FamilyGrid{ModelFamily::random_forest, {{"trees", {40}}, {"depth", {6}}}},
      FamilyGrid{ModelFamily::gradient_boost,
                 {{"rounds", {60}}, {"eta", {0.1}}, {"depth", {3}}}},
      FamilyGrid{ModelFamily::adaboost, {{"rounds", {60}}}},
      FamilyGrid{ModelFamily::knn, {{"k", {5, 15}}}}};
  const EnsembleBundle bundle = train_world(world, grids, 4242);

  BaselineOptions baseline;
  baseline.m = compute_match_threshold(world.history);

  std::size_t model_correct = 0, baseline_correct = 0;
  for (const MatchRecord& match : world.holdout) {
    const std::string actual =
        match.home_goals > match.away_goals ? match.home_team : match.away_team;
    const PredictionResult prediction =
        predict_match(bundle, match.home_team, match.away_team, match.date.year);
    if (prediction.winner == actual) model_correct++;
    const std::string pick = baseline_predict(world.history, match.home_team,
                                              match.away_team, match.date, baseline);
    if (pick == actual) baseline_correct++;
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const double model_accuracy = double(model_correct) / 200.0;
  require(model_accuracy >= 0.80,
          "ensemble holdout accuracy " + std::to_string(model_accuracy) + " is below 0.80");
  require(model_correct > baseline_correct,
          "ensemble (" + std::to_string(model_correct) + "/200) must beat the baseline (" +
              std::to_string(baseline_correct) + "/200)");
  require(elapsed < 120.0,
          "train+eval took " + std::to_string(elapsed) + " s, limit is 120 s");
  std::printf("       end-to-end: model %zu/200, baseline %zu/200, %.1f s\n",
              model_correct, baseline_correct, elapsed);
}

void criterion_bundle_round_trip() {
  const auto& f = small_fixture();
  const std::string path = temp_path("acceptance_roundtrip.bin");
  save_bundle(f.bundle, path);
  const EnsembleBundle loaded = load_bundle(path);

  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t ai = rng.next_below(32);
    std::size_t bi;
    do {
      bi = rng.next_below(32);
    } while (bi == ai);
    const int year = 2016 + int(rng.next_below(7));
    const PredictionResult before =
        predict_match(f.bundle, f.world.teams[ai], f.world.teams[bi], year);
    const PredictionResult after =
        predict_match(loaded, f.world.teams[ai], f.world.teams[bi], year);
    require(before.winner == after.winner && before.win_probability == after.win_probability,
            "round-tripped bundle must predict identically");
    for (std::size_t i = 0; i < 5; ++i) {
      require(before.per_family[i].team_a == after.per_family[i].team_a,
              "per-family probabilities must survive the round trip exactly");
      require(before.votes_for_a[i] == after.votes_for_a[i],
              "votes must survive the round trip");
    }
  }

  const std::string bytes = read_bytes(path);
  require(bytes.size() > 200, "bundle suspiciously small");

  const std::string truncated = temp_path("acceptance_truncated.bin");
  std::ofstream(truncated, std::ios::binary)
      .write(bytes.data(), std::streamsize(bytes.size() / 2));
  require_rejected([&] { load_bundle(truncated); }, "truncated",
                   "half a bundle must be rejected");

  std::string flipped_bytes = bytes;
  flipped_bytes[flipped_bytes.size() - 20] =
      char(flipped_bytes[flipped_bytes.size() - 20] ^ 0x10);
  const std::string flipped = temp_path("acceptance_flipped.bin");
  std::ofstream(flipped, std::ios::binary)
      .write(flipped_bytes.data(), std::streamsize(flipped_bytes.size()));
  require_rejected([&] { load_bundle(flipped); }, "checksum",
                   "a flipped payload bit must fail the checksum");

  const std::string garbage = temp_path("acceptance_garbage.bin");
  std::ofstream(garbage, std::ios::binary) << "this is not a bundle at all\n";
  require_rejected([&] { load_bundle(garbage); }, "not a model bundle",
                   "garbage must be rejected up front");
}

void criterion_bracket() {
  const BracketSpec spec = BracketSpec::from_file(kShare + "/bracket_2022.txt");
  require(spec.third_place, "the bundled bracket must play the third-place tie");

  // The bundled bracket names real teams; give each one planted synthetic
  // players by renaming a generated world onto the draw.
  std::vector<std::string> bracket_teams;
  for (const auto& group : spec.groups) {
    for (const auto& team : group.teams) bracket_teams.push_back(team);
  }
  require(bracket_teams.size() == 32, "bracket must seat 32 teams");

  synthetic::WorldOptions options;
  options.seed = 909;
  options.history_matches = 240;
  options.holdout_matches = 20;
  synthetic::World world = synthetic::make_world(options);
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < 32; ++i) rename[world.teams[i]] = bracket_teams[i];
  for (auto& team : world.teams) team = rename[team];
  for (auto& player : world.players) player.team = rename[player.team];
  for (auto& match : world.history) {
    match.home_team = rename[match.home_team];
    match.away_team = rename[match.away_team];
  }
  const EnsembleBundle bundle = train_world(world, small_grids(), 17);

  const SimulationResult result = simulate(bundle, spec);
  require(result.group_predictions == 48, "group stage must make 48 predictions");
  require(result.knockout_predictions == 16, "knockout must make 16 predictions");
  require(result.group_predictions + result.knockout_predictions == 64,
          "the tournament must make 64 predictions");
  require(!result.champion.empty(), "simulation must crown a champion");

  const std::string path_a = temp_path("acceptance_tree_a.json");
  write_tree_file(path_a, result);
  std::ifstream in(path_a);
  const nlohmann::json tree = nlohmann::json::parse(in);
  require(tree["groups"].size() == 8, "tree must list 8 groups");
  for (const auto& group : tree["groups"]) {
    require(group["standings"].size() == 4, "each group table must rank 4 teams");
  }
  require(tree["knockout"].size() == 16, "tree must list 16 knockout ties");
  for (const auto& tie : tree["knockout"]) {
    const std::string winner = tie["winner"];
    require(winner == tie["team_a"] || winner == tie["team_b"],
            "knockout winner must be one of the tie's teams");
  }
  require(tree["champion"] == result.champion, "tree champion must match");

  const SimulationResult rerun = simulate(bundle, spec);
  const std::string path_b = temp_path("acceptance_tree_b.json");
  write_tree_file(path_b, rerun);
  require(read_bytes(path_a) == read_bytes(path_b),
          "two simulations of the same bundle must emit identical trees");
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void()> run;
    double time_limit_s = 0.0;  // 0 = untimed
  };
  const std::vector<Criterion> criteria = {
      {"golden ledger reproduces the reference accuracy table", criterion_golden_ledger, 1.0},
      {"weighted win ratio endpoints, blend, monotonicity and limit", criterion_wwr},
      {"baseline pick is argument-order symmetric on 1000 random histories",
       criterion_baseline_symmetry},
      {"pca components orthonormal, reconstruction exact, eigenvalues match dense oracle",
       criterion_pca},
      {"logistic gradient matches central finite differences on 50 instances",
       criterion_logistic_gradient},
      {"k-nn matches the exhaustive-search oracle on 200 queries", criterion_knn_oracle},
      {"folds partition exactly, balance within one and never tear a match",
       criterion_fold_integrity},
      {"grid search never fits on a fold's held-out rows", criterion_no_leakage},
      {"ensemble: exact complements, 3-of-5 majority, order-invariance, reproducible bytes",
       criterion_ensemble_contract},
      {"synthetic end-to-end: >= 80% accuracy, above baseline, within 2 minutes",
       criterion_synthetic_end_to_end},
      {"bundle round-trip predicts identically and corruption is rejected",
       criterion_bundle_round_trip},
      {"bundled bracket yields 48 + 16 predictions and a stable tree", criterion_bracket},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    const auto started = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.run();
    } catch (const std::exception& err) {
      failure = err.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (failure.empty() && criterion.time_limit_s > 0.0 &&
        elapsed >= criterion.time_limit_s) {
      failure = "took " + std::to_string(elapsed) + " s, limit " +
                std::to_string(criterion.time_limit_s) + " s";
    }
    if (failure.empty()) {
      std::printf("[PASS] %2zu. %s (%.2f s)\n", i + 1, criterion.label, elapsed);
    } else {
      std::printf("[FAIL] %2zu. %s: %s\n", i + 1, criterion.label, failure.c_str());
      all_passed = false;
    }
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
