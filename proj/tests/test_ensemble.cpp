#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "footcast/binio.hpp"
#include "footcast/bundle.hpp"
#include "footcast/errors.hpp"
#include "footcast/examples.hpp"
#include "footcast/feature_select.hpp"
#include "footcast/predictor.hpp"
#include "footcast/profiles.hpp"
#include "footcast/rng.hpp"
#include "support/synthetic.hpp"

using namespace footcast;

namespace {

std::array<FamilyGrid, 5> tiny_grids() {
  return {FamilyGrid{ModelFamily::logistic, {{"lambda", {0.1}}}},
          FamilyGrid{ModelFamily::random_forest, {{"trees", {15}}, {"depth", {4}}}},
          FamilyGrid{ModelFamily::gradient_boost,
                     {{"rounds", {20}}, {"eta", {0.1}}, {"depth", {2}}}},
          FamilyGrid{ModelFamily::adaboost, {{"rounds", {20}}}},
          FamilyGrid{ModelFamily::knn, {{"k", {5}}}}};
}

struct Fixture {
  synthetic::World world;
  TrainOutcome outcome;
};

/// One trained world shared by the read-only tests in this file.
const Fixture& fixture() {
  static const Fixture fixture = [] {
    synthetic::WorldOptions options;
    options.history_matches = 240;
    options.holdout_matches = 20;
    Fixture f;
    f.world = synthetic::make_world(options);

    SelectionReport report;
    const auto retained =
        select_attributes(f.world.players, f.world.attribute_names, SelectionOptions{},
                          &report);
    const auto profiles = build_team_profiles(f.world.players, retained);
    const ExampleSet examples =
        assemble_examples(f.world.history, profiles, retained, 2);

    TrainSettings settings;
    settings.search.seed = 77;
    f.outcome = train_ensemble(examples, tiny_grids(), settings, profiles, retained,
                               {{"Holland", f.world.teams[2]}}, {{"seed", "77"}});
    return f;
  }();
  return fixture;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::vector<char> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::vector<char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), std::streamsize(bytes.size()));
}

}  // namespace

TEST_CASE("per-family probabilities are exact complements") {
  const auto& f = fixture();
  const auto result =
      predict_match(f.outcome.bundle, f.world.teams[0], f.world.teams[9], 2022);
  for (const ProbPair& p : result.per_family) {
    CHECK(std::abs(p.team_a + p.team_b - 1.0) <= 1e-12);
    CHECK(p.team_a >= 0.0);
    CHECK(p.team_a <= 1.0);
  }
}

TEST_CASE("the winner always carries a majority") {
  const auto& f = fixture();
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.next_below(32);
    auto b = rng.next_below(32);
    if (b == a) b = (b + 1) % 32;
    const auto result =
        predict_match(f.outcome.bundle, f.world.teams[a], f.world.teams[b], 2022);
    CHECK(result.votes_for_winner >= 3);
    CHECK(result.votes_for_winner <= 5);
    CHECK((result.winner == f.world.teams[a] || result.winner == f.world.teams[b]));
    int votes = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      const bool winner_is_a = result.winner == result.team_a;
      if (result.votes_for_a[k] == winner_is_a) ++votes;
    }
    CHECK(votes == result.votes_for_winner);
  }
}

TEST_CASE("swapping the pairing order mirrors the result exactly") {
  const auto& f = fixture();
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.next_below(32);
    auto b = rng.next_below(32);
    if (b == a) b = (b + 1) % 32;
    const auto ab =
        predict_match(f.outcome.bundle, f.world.teams[a], f.world.teams[b], 2022);
    const auto ba =
        predict_match(f.outcome.bundle, f.world.teams[b], f.world.teams[a], 2022);
    CHECK(ab.winner == ba.winner);
    CHECK(ab.win_probability == ba.win_probability);
    CHECK(ab.votes_for_winner == ba.votes_for_winner);
    for (std::size_t k = 0; k < 5; ++k) {
      // the mirrored pair differs only by the complement's rounding
      CHECK(std::abs(ab.per_family[k].team_a - ba.per_family[k].team_b) <= 1e-12);
      CHECK(ab.votes_for_a[k] == !ba.votes_for_a[k]);
    }
  }
}

TEST_CASE("aliases resolve before profile lookup") {
  const auto& f = fixture();
  const std::string& canonical = f.world.teams[2];
  const auto direct = predict_match(f.outcome.bundle, canonical, f.world.teams[7], 2022);
  const auto aliased = predict_match(f.outcome.bundle, "Holland", f.world.teams[7], 2022);
  CHECK(direct.winner == aliased.winner);
  CHECK(direct.win_probability == aliased.win_probability);
  // the caller's spelling is canonicalized in the result
  CHECK(aliased.team_a == canonical);
}

TEST_CASE("identical teams are rejected") {
  const auto& f = fixture();
  CHECK_THROWS_AS(predict_match(f.outcome.bundle, f.world.teams[0], f.world.teams[0], 2022),
                  DataError);
  // also via an alias of the same team
  CHECK_THROWS_AS(predict_match(f.outcome.bundle, "Holland", f.world.teams[2], 2022),
                  DataError);
}

TEST_CASE("unknown teams fail with the team named") {
  const auto& f = fixture();
  try {
    predict_match(f.outcome.bundle, "Atlantis", f.world.teams[1], 2022);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("Atlantis") != std::string::npos);
  }
}

TEST_CASE("profile lookups honor the year fallback depth") {
  const auto& f = fixture();
  const int depth = f.outcome.bundle.year_fallback_depth;
  REQUIRE(depth == 2);
  // rosters exist through 2022: lookups at 2024 still resolve, 2025 does not
  CHECK_NOTHROW(predict_match(f.outcome.bundle, f.world.teams[0], f.world.teams[1], 2024));
  CHECK_THROWS_AS(predict_match(f.outcome.bundle, f.world.teams[0], f.world.teams[1], 2025),
                  DataError);
}

TEST_CASE("majority row pick agrees with the family probabilities") {
  const auto& f = fixture();
  const auto& bundle = f.outcome.bundle;
  Rng rng(8);
  const std::size_t width = bundle.retained_attributes.size() * 2;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> raw(width);
    for (auto& v : raw) v = rng.next_range(40, 90);
    const auto probs = family_probabilities(bundle, raw);
    int votes_a = 0;
    for (const ProbPair& p : probs) {
      if (pick_from(p) == Winner::team_a) ++votes_a;
    }
    const Winner expected = votes_a >= 3 ? Winner::team_a : Winner::team_b;
    CHECK(majority_row_pick(bundle, raw) == expected);
  }
}

TEST_CASE("pca decision follows the per-family best accuracies") {
  const auto& f = fixture();
  double mean_off = 0.0, mean_on = 0.0;
  bool both_eligible = true;
  for (const auto& search : f.outcome.searches) {
    const auto off = search.best_for_pca(false);
    const auto on = search.best_for_pca(true);
    if (!off || !on) {
      both_eligible = false;
      break;
    }
    mean_off += search.cells[*off].mean_accuracy / 5.0;
    mean_on += search.cells[*on].mean_accuracy / 5.0;
  }
  REQUIRE(both_eligible);
  CHECK(f.outcome.pca_chosen == (mean_on > mean_off));
  CHECK(f.outcome.bundle.pca.has_value() == f.outcome.pca_chosen);

  for (std::size_t i = 0; i < 5; ++i) {
    const auto& chosen = f.outcome.searches[i].cells[f.outcome.chosen_cells[i]];
    CHECK(chosen.pca_on == f.outcome.pca_chosen);
    CHECK(chosen.valid);
  }
}

TEST_CASE("training twice with one seed is byte-identical") {
  const auto& f = fixture();
  SelectionReport report;
  const auto retained = select_attributes(f.world.players, f.world.attribute_names,
                                          SelectionOptions{}, &report);
  const auto profiles = build_team_profiles(f.world.players, retained);
  const ExampleSet examples = assemble_examples(f.world.history, profiles, retained, 2);
  TrainSettings settings;
  settings.search.seed = 123;
  const auto o1 =
      train_ensemble(examples, tiny_grids(), settings, profiles, retained, {}, {});
  const auto o2 =
      train_ensemble(examples, tiny_grids(), settings, profiles, retained, {}, {});

  const auto p1 = temp_path("det1.bundle");
  const auto p2 = temp_path("det2.bundle");
  save_bundle(o1.bundle, p1);
  save_bundle(o2.bundle, p2);
  CHECK(slurp(p1) == slurp(p2));

  // and a different seed changes the forest, hence the bytes
  settings.search.seed = 124;
  const auto o3 =
      train_ensemble(examples, tiny_grids(), settings, profiles, retained, {}, {});
  const auto p3 = temp_path("det3.bundle");
  save_bundle(o3.bundle, p3);
  CHECK(slurp(p1) != slurp(p3));
}

TEST_CASE("grids must arrive in canonical family order") {
  const auto& f = fixture();
  SelectionReport report;
  const auto retained = select_attributes(f.world.players, f.world.attribute_names,
                                          SelectionOptions{}, &report);
  const auto profiles = build_team_profiles(f.world.players, retained);
  const ExampleSet examples = assemble_examples(f.world.history, profiles, retained, 2);
  auto grids = tiny_grids();
  std::swap(grids[0], grids[1]);
  TrainSettings settings;
  CHECK_THROWS_AS(
      train_ensemble(examples, grids, settings, profiles, retained, {}, {}), ConfigError);
}

TEST_CASE("bundles round-trip through disk") {
  const auto& f = fixture();
  const auto path = temp_path("roundtrip.bundle");
  save_bundle(f.outcome.bundle, path);
  const EnsembleBundle loaded = load_bundle(path);

  CHECK(loaded.format_major == kBundleFormatMajor);
  CHECK(loaded.format_minor == kBundleFormatMinor);
  CHECK(loaded.seed == f.outcome.bundle.seed);
  CHECK(loaded.retained_attributes == f.outcome.bundle.retained_attributes);
  CHECK(loaded.aliases == f.outcome.bundle.aliases);
  CHECK(loaded.config_snapshot == f.outcome.bundle.config_snapshot);
  CHECK(loaded.profiles.size() == f.outcome.bundle.profiles.size());
  CHECK(loaded.pca.has_value() == f.outcome.bundle.pca.has_value());

  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto a = rng.next_below(32);
    auto b = rng.next_below(32);
    if (b == a) b = (b + 1) % 32;
    const auto before =
        predict_match(f.outcome.bundle, f.world.teams[a], f.world.teams[b], 2022);
    const auto after = predict_match(loaded, f.world.teams[a], f.world.teams[b], 2022);
    CHECK(before.winner == after.winner);
    CHECK(before.win_probability == after.win_probability);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(before.per_family[k].team_a == after.per_family[k].team_a);
    }
  }

  // saving the loaded bundle reproduces the file byte for byte
  const auto again = temp_path("roundtrip2.bundle");
  save_bundle(loaded, again);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("garbage files are not bundles") {
  const auto path = temp_path("garbage.bundle");
  std::ofstream(path) << "not a bundle at all";
  CHECK_THROWS_AS(load_bundle(path), DataError);
  CHECK_THROWS_AS(load_bundle("/nonexistent/path.bundle"), DataError);
}

TEST_CASE("unsupported major versions are refused") {
  const auto& f = fixture();
  const auto path = temp_path("major.bundle");
  save_bundle(f.outcome.bundle, path);
  auto bytes = slurp(path);
  // header begins "FOOTCASTB 1.1"; bump the major digit
  const std::string needle = " 1.1\n";
  auto it = std::search(bytes.begin(), bytes.end(), needle.begin(), needle.end());
  REQUIRE(it != bytes.end());
  *(it + 1) = '9';
  spit(path, bytes);
  try {
    load_bundle(path);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("unsupported") != std::string::npos);
  }
}

TEST_CASE("truncated bundles are refused") {
  const auto& f = fixture();
  const auto path = temp_path("trunc.bundle");
  save_bundle(f.outcome.bundle, path);
  auto bytes = slurp(path);
  bytes.resize(bytes.size() / 2);
  spit(path, bytes);
  try {
    load_bundle(path);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("truncated") != std::string::npos);
  }
}

TEST_CASE("flipped payload bits fail the checksum") {
  const auto& f = fixture();
  const auto path = temp_path("crc.bundle");
  save_bundle(f.outcome.bundle, path);
  auto bytes = slurp(path);
  bytes[bytes.size() - 10] ^= 0x01;
  spit(path, bytes);
  try {
    load_bundle(path);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("checksum") != std::string::npos);
  }
}

TEST_CASE("older minor versions load with defaulted fields") {
  const auto& f = fixture();
  const auto path = temp_path("minor.bundle");
  save_bundle(f.outcome.bundle, path);
  const auto bytes = slurp(path);

  // split header / meta / payload
  const std::string text(bytes.begin(), bytes.end());
  const auto header_end = text.find("\n\n");
  REQUIRE(header_end != std::string::npos);
  std::size_t meta_size = 0, payload_size = 0;
  REQUIRE(std::sscanf(text.c_str(), "FOOTCASTB %*u.%*u\nmeta %zu\npayload %zu", &meta_size,
                      &payload_size) == 2);
  const std::size_t body = header_end + 2;

  // rewrite the metadata as a 1.0 writer would have: no aliases key
  auto meta = nlohmann::json::parse(text.substr(body, meta_size));
  meta.erase("aliases");
  meta["format"]["minor"] = 0;
  const std::string new_meta = meta.dump();

  std::vector<std::uint8_t> checked(new_meta.begin(), new_meta.end());
  checked.insert(checked.end(), bytes.begin() + std::ptrdiff_t(body + meta_size),
                 bytes.end());
  const std::uint32_t crc = crc32(checked);

  char header[160];
  std::snprintf(header, sizeof(header), "FOOTCASTB 1.0\nmeta %zu\npayload %zu\ncrc32 %08x\n\n",
                new_meta.size(), payload_size, crc);
  {
    std::ofstream out(path, std::ios::binary);
    out << header << new_meta;
    out.write(bytes.data() + std::ptrdiff_t(body + meta_size),
              std::streamsize(payload_size));
  }

  const EnsembleBundle old = load_bundle(path);
  CHECK(old.format_minor == 0);
  CHECK(old.aliases.empty());  // defaulted, not inherited
  CHECK(old.retained_attributes == f.outcome.bundle.retained_attributes);
  const auto result = predict_match(old, f.world.teams[0], f.world.teams[5], 2022);
  CHECK((result.winner == f.world.teams[0] || result.winner == f.world.teams[5]));
}

TEST_CASE("preprocess validates the raw width") {
  const auto& f = fixture();
  const std::vector<double> wrong = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(f.outcome.bundle.preprocess(wrong), std::invalid_argument);
}

TEST_CASE("rendered predictions carry both formats") {
  const auto& f = fixture();
  const auto result =
      predict_match(f.outcome.bundle, f.world.teams[0], f.world.teams[1], 2022);
  const std::string text = render_prediction(result, false);
  CHECK(text.find(result.winner) != std::string::npos);
  CHECK(text.find("votes") != std::string::npos);

  const std::string machine = render_prediction(result, true);
  const auto parsed = nlohmann::json::parse(machine);
  CHECK(parsed["winner"] == result.winner);
  CHECK(parsed["votes_for_winner"] == result.votes_for_winner);
  CHECK(parsed["families"].size() == 5);
  const double pa = parsed["families"]["logistic"]["p_team_a"];
  CHECK(pa == result.per_family[0].team_a);
}
