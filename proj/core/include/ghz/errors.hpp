#pragma once

#include <stdexcept>
#include <string>

namespace ghz {

/// Bad arguments or violated preconditions (maps to CLI exit code 2).
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical invariant broke mid-computation, e.g. norm drift or a
/// density matrix turning indefinite (maps to CLI exit code 3).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghz
