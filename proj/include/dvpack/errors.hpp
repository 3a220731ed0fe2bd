#pragma once

#include <stdexcept>
#include <string>

namespace dvpack {

// Malformed or invalid external input (instance files, solution files, configs).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid random-generator configuration.
class ConfigError : public InputError {
public:
    explicit ConfigError(const std::string& what) : InputError(what) {}
};

}  // namespace dvpack
