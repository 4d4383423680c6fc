#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace footcast {

/// Derives a component seed from one root seed and a scope name, so every
/// consumer gets an independent stream and adding a consumer never perturbs
/// the streams of existing ones.
std::uint64_t derive_seed(std::uint64_t root, std::string_view scope);

/// mt19937_64 with hand-rolled draw helpers. The standard pins the engine's
/// output sequence; the <random> distributions do not, so bounded and real
/// draws are implemented here to keep results identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit();

  double next_range(double lo, double hi);

  /// Uniform in [0, n), unbiased. n must be > 0.
  std::size_t next_below(std::size_t n);

  /// Standard normal via polar Box-Muller.
  double next_gaussian();

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace footcast
