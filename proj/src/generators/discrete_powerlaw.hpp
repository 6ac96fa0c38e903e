#pragma once

#include <cstdint>
#include <vector>

#include "commbench/random.hpp"

namespace commbench {

// Inverse-CDF sampler for P(x) ~ x^-exponent on the integers [min, max].
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(double exponent, std::int64_t min, std::int64_t max);
  std::int64_t operator()(Rng& rng) const;

 private:
  std::int64_t min_;
  std::vector<double> cdf_;
};

}  // namespace commbench
