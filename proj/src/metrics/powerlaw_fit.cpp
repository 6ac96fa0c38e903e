#include <algorithm>
#include <cmath>
#include <numeric>

#include "commbench/error.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

std::int32_t default_powerlaw_kmin(std::span<const std::int32_t> degrees) {
  if (degrees.empty()) return 2;
  const double mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) /
                      static_cast<double>(degrees.size());
  return std::max(2, static_cast<std::int32_t>(std::floor(mean / 2.0)));
}

PowerLawFit powerlaw_mle(std::span<const std::int32_t> degrees, std::int32_t kmin) {
  if (kmin < 1) throw ConfigError("power-law kmin must be >= 1");
  constexpr std::size_t kMinTail = 100;

  PowerLawFit fit;
  fit.kmin = kmin;
  double log_sum = 0.0;
  std::int32_t first = -1;
  bool all_equal = true;
  const double shift = kmin - 0.5;
  for (std::int32_t k : degrees) {
    if (k < kmin) continue;
    ++fit.sample_size;
    log_sum += std::log(k / shift);
    if (first < 0) first = k;
    all_equal = all_equal && k == first;
  }
  if (fit.sample_size < kMinTail) {
    throw DataError("too few samples: power-law fit needs " + std::to_string(kMinTail) +
                    " degrees >= kmin, got " + std::to_string(fit.sample_size));
  }
  if (all_equal) throw DataError("degenerate tail: every tail degree equals " + std::to_string(first));
  fit.exponent = 1.0 + static_cast<double>(fit.sample_size) / log_sum;
  return fit;
}

PowerLawFit powerlaw_mle(std::span<const std::int32_t> degrees) {
  return powerlaw_mle(degrees, default_powerlaw_kmin(degrees));
}

}  // namespace commbench
