#ifndef MRCLUST_RNG_HPP
#define MRCLUST_RNG_HPP

#include <cstdint>
#include <vector>

// Portable seeded randomness helpers. Everything in the project that flips a
// coin or draws an index goes through these, so results are identical across
// platforms and standard libraries (std::uniform_int_distribution and friends
// are implementation-defined).

namespace mrclust {

// SplitMix64 step; also used as a general 64-bit mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines a seed with tag words into a fresh 64-bit stream value.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a) {
  return splitmix64(seed ^ splitmix64(a));
}
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
  return mix_seed(mix_seed(seed, a, b), c);
}

// Small counter-based generator built on splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n) by rejection; n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  // Standard normal via Box-Muller (one value per call, no cached spare so the
  // stream position is easy to reason about).
  double next_normal();

 private:
  std::uint64_t state_;
};

// Fisher-Yates shuffle driven by Rng.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// k distinct draws from [0, n), in draw order.
std::vector<std::uint32_t> sample_distinct(std::uint64_t seed, std::uint32_t n,
                                           std::uint32_t k);

// Coin for a (seed, iteration, point, tag) tuple: true with probability p.
inline bool seeded_coin(std::uint64_t seed, std::uint64_t iteration, std::uint64_t point,
                        std::uint64_t tag, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  const std::uint64_t u = mix_seed(seed, iteration, point, tag);
  return static_cast<double>(u >> 11) * 0x1.0p-53 < p;
}

}  // namespace mrclust

#endif  // MRCLUST_RNG_HPP
