#pragma once

#include <stdexcept>
#include <string>

namespace hitchin {

/// Raised when well-formed input falls outside what the mathematics supports
/// (unpackable factorization, elliptic spec outside the known table, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed or schema-invalid input.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hitchin
