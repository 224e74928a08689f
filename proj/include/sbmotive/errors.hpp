#pragma once

#include <stdexcept>
#include <string>

namespace sbm {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operation is well-posed but not determined by the available rules
/// (opaque upper motives, odd-prime function-field twists, ...).
class UnsupportedError : public std::logic_error {
public:
    explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sbm
