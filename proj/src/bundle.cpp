#include "footcast/bundle.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "footcast/errors.hpp"
#include "footcast/rng.hpp"

namespace footcast {

std::size_t EnsembleBundle::input_dimension() const {
  return pca ? pca->retained() : scaler.means().size();
}

std::vector<double> EnsembleBundle::preprocess(std::span<const double> raw) const {
  std::vector<double> x = scaler.apply(raw);
  if (pca) x = pca->transform(x);
  return x;
}

TrainOutcome train_ensemble(const ExampleSet& train,
                            const std::array<FamilyGrid, 5>& grids,
                            const TrainSettings& settings, ProfileMap profiles,
                            std::vector<std::string> retained_attributes,
                            std::map<std::string, std::string> aliases,
                            std::map<std::string, std::string> config_snapshot) {
  const FoldPlan folds =
      plan_folds(train, settings.k_folds, settings.search.seed, settings.stratified);

  TrainOutcome outcome;
  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    if (grids[i].family != kAllFamilies[i]) {
      throw ConfigError("grid order must follow the declared family order");
    }
    outcome.searches[i] =
        grid_search(kAllFamilies[i], grids[i], train, folds, settings.search);
  }

  // One bundle carries one preprocessing stack, so PCA on/off is decided
  // globally: the option whose per-family best cells average higher wins,
  // and a tie keeps PCA off.
  double mean_for[2] = {0.0, 0.0};
  bool eligible[2] = {true, true};
  for (int option = 0; option < 2; ++option) {
    double sum = 0.0;
    for (const GridSearchResult& search : outcome.searches) {
      const auto best = search.best_for_pca(option == 1);
      if (!best) {
        eligible[option] = false;
        break;
      }
      sum += search.cells[*best].mean_accuracy;
    }
    mean_for[option] = sum / static_cast<double>(kAllFamilies.size());
  }
  if (!eligible[0] && !eligible[1]) {
    throw DataError("no PCA option is valid across all five families");
  }
  outcome.pca_chosen =
      eligible[1] && (!eligible[0] || mean_for[1] > mean_for[0]);

  EnsembleBundle& bundle = outcome.bundle;
  bundle.scaler = Scaler::fit(train.matrix, settings.search.scaler_std_floor);
  Matrix X = bundle.scaler.apply(train.matrix);
  if (outcome.pca_chosen) {
    bundle.pca = fit_pca(X, settings.search.pca_variance_target);
    X = bundle.pca->transform(X);
  }

  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    const std::size_t cell = *outcome.searches[i].best_for_pca(outcome.pca_chosen);
    outcome.chosen_cells[i] = cell;
    ClassifierSpec spec;
    spec.family = kAllFamilies[i];
    spec.hyperparams = outcome.searches[i].cells[cell].hyperparams;
    spec.seed = derive_seed(cell_seed(settings.search.seed, spec.family, spec.hyperparams,
                                      outcome.pca_chosen),
                            "final");
    bundle.classifiers[i] = fit_classifier(spec, X, train.labels);
  }

  bundle.retained_attributes = std::move(retained_attributes);
  bundle.profiles = std::move(profiles);
  bundle.aliases = std::move(aliases);
  bundle.config_snapshot = std::move(config_snapshot);
  bundle.seed = settings.search.seed;
  bundle.year_fallback_depth = settings.year_fallback_depth;
  return outcome;
}

namespace {

constexpr char kMagic[] = "FOOTCASTB";

std::vector<std::uint8_t> build_payload(const EnsembleBundle& bundle) {
  BinaryWriter out;
  out.put_u64(bundle.scaler.means().size());
  out.put_f64(bundle.scaler.std_floor());
  for (double m : bundle.scaler.means()) out.put_f64(m);
  for (double s : bundle.scaler.stds()) out.put_f64(s);

  out.put_u8(bundle.pca ? 1 : 0);
  if (bundle.pca) {
    out.put_u64(bundle.pca->retained());
    out.put_u64(bundle.pca->input_dimension());
    for (std::size_t i = 0; i < bundle.pca->retained(); ++i) {
      for (double v : bundle.pca->components.row(i)) out.put_f64(v);
    }
    for (double v : bundle.pca->explained_variance) out.put_f64(v);
    for (double v : bundle.pca->center) out.put_f64(v);
  }

  for (const auto& classifier : bundle.classifiers) {
    out.put_u8(static_cast<std::uint8_t>(classifier->family()));
    classifier->serialize(out);
  }

  out.put_u64(bundle.profiles.size());
  for (const auto& [key, profile] : bundle.profiles) {
    out.put_string(profile.team);
    out.put_i64(profile.year);
    out.put_u32(static_cast<std::uint32_t>(profile.roster_size));
    out.put_f64_span(profile.features);
  }
  return out.take();
}

void read_payload(BinaryReader& in, EnsembleBundle& bundle) {
  const std::uint64_t d = in.get_u64();
  const double floor = in.get_f64();
  std::vector<double> means = in.get_f64_vector(d);
  std::vector<double> stds = in.get_f64_vector(d);
  bundle.scaler = Scaler(std::move(means), std::move(stds), floor);

  if (in.get_u8() != 0) {
    PcaModel pca;
    const std::uint64_t k = in.get_u64();
    const std::uint64_t dim = in.get_u64();
    pca.components = Matrix(k, dim);
    for (std::uint64_t i = 0; i < k; ++i) {
      auto row = pca.components.row(i);
      for (std::uint64_t j = 0; j < dim; ++j) row[j] = in.get_f64();
    }
    pca.explained_variance = in.get_f64_vector(k);
    pca.center = in.get_f64_vector(dim);
    bundle.pca = std::move(pca);
  }

  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    bundle.classifiers[i] = deserialize_classifier(in);
    if (bundle.classifiers[i]->family() != kAllFamilies[i]) {
      throw DataError("bundle classifiers out of family order");
    }
  }

  const std::uint64_t n_profiles = in.get_u64();
  for (std::uint64_t i = 0; i < n_profiles; ++i) {
    TeamProfile profile;
    profile.team = in.get_string();
    profile.year = static_cast<int>(in.get_i64());
    profile.roster_size = static_cast<int>(in.get_u32());
    const std::uint64_t n_features = in.get_u64();
    profile.features = in.get_f64_vector(n_features);
    bundle.profiles.emplace(ProfileKey{profile.team, profile.year}, std::move(profile));
  }
}

}  // namespace

void save_bundle(const EnsembleBundle& bundle, const std::string& path) {
  nlohmann::json meta;
  meta["format"] = {{"major", bundle.format_major}, {"minor", bundle.format_minor}};
  meta["seed"] = bundle.seed;
  meta["year_fallback_depth"] = bundle.year_fallback_depth;
  meta["retained_attributes"] = bundle.retained_attributes;
  meta["aliases"] = bundle.aliases;
  meta["config"] = bundle.config_snapshot;
  nlohmann::json families = nlohmann::json::array();
  for (ModelFamily family : kAllFamilies) families.push_back(to_string(family));
  meta["families"] = families;
  meta["pca"] = bundle.pca.has_value();
  meta["profile_count"] = bundle.profiles.size();

  const std::string meta_text = meta.dump();
  const std::vector<std::uint8_t> payload = build_payload(bundle);

  std::vector<std::uint8_t> checked;
  checked.reserve(meta_text.size() + payload.size());
  checked.insert(checked.end(), meta_text.begin(), meta_text.end());
  checked.insert(checked.end(), payload.begin(), payload.end());
  const std::uint32_t crc = crc32(checked);

  char header[160];
  std::snprintf(header, sizeof(header), "%s %u.%u\nmeta %zu\npayload %zu\ncrc32 %08x\n\n",
                kMagic, bundle.format_major, bundle.format_minor, meta_text.size(),
                payload.size(), crc);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write bundle: " + path);
  out << header;
  out.write(meta_text.data(), static_cast<std::streamsize>(meta_text.size()));
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
  if (!out) throw DataError("short write while saving bundle: " + path);
}

EnsembleBundle load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open bundle: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string file = buffer.str();

  // Header: magic + version, meta size, payload size, crc, blank line.
  unsigned major = 0, minor = 0;
  std::size_t meta_size = 0, payload_size = 0;
  std::uint32_t stored_crc = 0;
  int header_len = 0;
  char magic[16] = {0};
  const int fields =
      std::sscanf(file.c_str(), "%15s %u.%u\nmeta %zu\npayload %zu\ncrc32 %" SCNx32 "\n\n%n",
                  magic, &major, &minor, &meta_size, &payload_size, &stored_crc,
                  &header_len);
  if (fields != 6 || std::string(magic) != kMagic || header_len <= 0) {
    throw DataError("not a model bundle: " + path);
  }
  if (major != kBundleFormatMajor) {
    std::ostringstream os;
    os << "unsupported bundle format " << major << "." << minor << " (supported major "
       << kBundleFormatMajor << ")";
    throw DataError(os.str());
  }
  const std::size_t body_begin = static_cast<std::size_t>(header_len);
  if (file.size() < body_begin + meta_size + payload_size) {
    throw DataError("truncated bundle: " + path);
  }

  const auto* body = reinterpret_cast<const std::uint8_t*>(file.data()) + body_begin;
  const std::uint32_t actual_crc = crc32({body, meta_size + payload_size});
  if (actual_crc != stored_crc) {
    throw DataError("bundle checksum mismatch: " + path);
  }

  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(file.substr(body_begin, meta_size));
  } catch (const nlohmann::json::exception& err) {
    throw DataError(std::string("bad bundle metadata: ") + err.what());
  }

  EnsembleBundle bundle;
  bundle.format_major = static_cast<std::uint16_t>(major);
  bundle.format_minor = static_cast<std::uint16_t>(minor);
  bundle.seed = meta.value("seed", std::uint64_t{0});
  bundle.year_fallback_depth = meta.value("year_fallback_depth", 2);
  bundle.retained_attributes =
      meta.value("retained_attributes", std::vector<std::string>{});
  // Aliases joined the metadata in 1.1; older bundles default to none.
  bundle.aliases = meta.value("aliases", std::map<std::string, std::string>{});
  bundle.config_snapshot = meta.value("config", std::map<std::string, std::string>{});

  BinaryReader reader({body + meta_size, payload_size});
  read_payload(reader, bundle);
  return bundle;
}

}  // namespace footcast
