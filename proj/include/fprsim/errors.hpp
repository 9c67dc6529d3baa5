#pragma once

#include <stdexcept>
#include <string>

namespace fprsim {

// Bad user-facing input: unknown preset, malformed file, invalid rate vector.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fprsim
