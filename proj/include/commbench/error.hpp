#pragma once

#include <stdexcept>
#include <string>

namespace commbench {

// Raised for malformed or inconsistent input data (edge lists, partitions,
// infeasible generator outcomes). The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for invalid parameters. The CLI maps it to exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace commbench
