#include "mrclust/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mrclust {

double Rng::next_normal() {
  // Box-Muller; u is kept away from zero so the log is finite.
  double u = next_double();
  while (u <= 0.0) u = next_double();
  const double v = next_double();
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u)) * std::cos(two_pi * v);
}

std::vector<std::uint32_t> sample_distinct(std::uint64_t seed, std::uint32_t n,
                                           std::uint32_t k) {
  if (k > n) throw std::invalid_argument("cannot sample more distinct values than exist");
  // Partial Fisher-Yates over [0, n) tracked sparsely via swaps.
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  Rng rng(seed);
  std::vector<std::uint32_t> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace mrclust
