#pragma once

#include <stdexcept>
#include <string>

namespace scwave {

// Invalid parameters, malformed config, incompatible grids.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative scheme ran out of its iteration budget or lost its bracket.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A profile does not cross the requested level (kink absent or exited).
class NoCrossingError : public std::runtime_error {
public:
    explicit NoCrossingError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scwave
