#pragma once

#include <stdexcept>
#include <string>

namespace ecg {

/// Input data violates a documented precondition or schema.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because the instance exceeds a size or dimension limit.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex enumeration was asked for an unbounded polyhedron.
class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ecg
