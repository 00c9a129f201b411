#pragma once

#include <stdexcept>
#include <string>

namespace photonet {

// Invalid run configuration (bad learning parameter, empty sweep grid, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed component graph (dangling channel, cycle, missing source or detector).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Output file could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace photonet
