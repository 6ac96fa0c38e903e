#include <algorithm>
#include <cmath>
#include <string>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"
#include "discrete_powerlaw.hpp"

namespace commbench {

DiscretePowerLaw::DiscretePowerLaw(double exponent, std::int64_t min, std::int64_t max)
    : min_(min) {
  if (min > max) throw ConfigError("power-law support is empty");
  if (min < 1) throw ConfigError("power-law support must start at 1 or above");
  if (!(exponent >= 1.0)) throw ConfigError("power-law exponent must be >= 1");
  cdf_.reserve(static_cast<std::size_t>(max - min + 1));
  double acc = 0.0;
  for (std::int64_t x = min; x <= max; ++x) {
    acc += std::pow(static_cast<double>(x), -exponent);
    cdf_.push_back(acc);
  }
}

std::int64_t DiscretePowerLaw::operator()(Rng& rng) const {
  const double u = uniform_real(rng) * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return min_ + (it - cdf_.begin());
}

std::vector<std::int64_t> sample_powerlaw_sequence(double exponent, std::int64_t min,
                                                   std::int64_t max, std::size_t length,
                                                   std::uint64_t seed) {
  DiscretePowerLaw dist(exponent, min, max);
  Rng rng = make_rng(seed);
  std::vector<std::int64_t> out(length);
  for (auto& x : out) x = dist(rng);
  return out;
}

std::vector<NodeId> sample_community_sizes(NodeId n, NodeId cmin, NodeId cmax,
                                           double exponent, Rng& rng) {
  if (cmin < 1 || cmin > cmax || cmax > n) {
    throw ConfigError("community size bounds must satisfy 1 <= cmin <= cmax <= n (got " +
                      std::to_string(cmin) + ", " + std::to_string(cmax) + ", n=" +
                      std::to_string(n) + ")");
  }
  DiscretePowerLaw dist(exponent, cmin, cmax);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<NodeId> sizes;
    std::int64_t sum = 0;
    while (sum < n) {
      sizes.push_back(static_cast<NodeId>(dist(rng)));
      sum += sizes.back();
    }
    std::int64_t excess = sum - n;
    for (auto it = sizes.rbegin(); it != sizes.rend() && excess > 0; ++it) {
      const std::int64_t take = std::min<std::int64_t>(excess, *it - cmin);
      *it -= static_cast<NodeId>(take);
      excess -= take;
    }
    if (excess == 0) return sizes;
  }
  throw DataError("no community size sequence within [" + std::to_string(cmin) + ", " +
                  std::to_string(cmax) + "] sums to " + std::to_string(n));
}

}  // namespace commbench
