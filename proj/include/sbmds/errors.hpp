#pragma once

#include <stdexcept>
#include <string>

namespace sbmds {

// Shapes disagree (vector lengths, matrix sizes, trace vs reference).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A parameter is outside its mathematical domain (sigma2 <= 0, bad bounds).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configuration value is out of range (band count, thinning, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Input data failed validation (asymmetric matrix, non-finite entries, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed (eigensolver breakdown, non-finite state).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbmds
