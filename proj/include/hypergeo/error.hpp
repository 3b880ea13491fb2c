#pragma once

#include <stdexcept>
#include <string>

namespace hypergeo {

/// Thrown when urn parameters or a probability value violate their domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a quantity is undefined for the given parameters, e.g. a
/// deviation with zero draws.
class DegenerateError : public std::domain_error {
public:
    explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown on malformed textual input (fractions, decimals).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hypergeo
