#pragma once

#include <stdexcept>

namespace footcast {

/// Bad user-supplied configuration or command arguments. CLI exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data. CLI exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant. CLI exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace footcast
