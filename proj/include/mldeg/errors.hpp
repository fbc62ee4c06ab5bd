#pragma once

#include <stdexcept>
#include <string>

namespace mldeg {

// Bad argument to a mathematical function (e.g. a negative binomial top).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Matrix shape problems: non-square, odd Pfaffian, not skew.
class StructureError : public std::invalid_argument {
public:
    explicit StructureError(const std::string& what) : std::invalid_argument(what) {}
};

// Two computation routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class TruncationError : public std::out_of_range {
public:
    explicit TruncationError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace mldeg
