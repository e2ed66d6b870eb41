#pragma once

#include <stdexcept>
#include <string>

namespace metchar {

// Raised for malformed configuration (bad keys, out-of-range values).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for unreadable or malformed input data (images, manifests).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace metchar
