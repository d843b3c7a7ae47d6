#pragma once

#include <stdexcept>
#include <string>

namespace tramp {

// Invalid configuration or mismatched dimensions.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// File open/read/write failures and malformed files.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tramp
