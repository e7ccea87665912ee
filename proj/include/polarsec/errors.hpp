#pragma once

#include <stdexcept>
#include <string>

namespace polarsec {

// Thrown when an exact computation would exceed its configured budget
// (exhaustive synthesis or enumeration asked for at too large a size).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when inputs violate a structural invariant that valid data cannot
// violate (e.g. index-set nesting from a non-degraded channel pair).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polarsec
