#pragma once

#include <stdexcept>
#include <string>

namespace hypo {

/// Malformed or out-of-contract input (bad file, bad vertex id, wrong
/// precondition). The CLI maps this to exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bundled asset failed its ingestion-time structural checks.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypo
