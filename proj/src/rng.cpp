#include "footcast/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace footcast {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view scope) {
  std::uint64_t state = root ^ fnv1a(scope);
  splitmix64(state);
  return splitmix64(state);
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

std::size_t Rng::next_below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;  // rejection zone size
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = next_range(-1.0, 1.0);
    v = next_range(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

}  // namespace footcast
