#pragma once

#include <stdexcept>
#include <string>

namespace flagx {

/// Mathematically invalid input: unsupported family/rank, parabolic set that
/// collapses M to a point, parameter outside the Weyl chamber, ...
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must hold failed. Never expected; signals a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagx
