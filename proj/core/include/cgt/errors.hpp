#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// Violated input contract. The command line maps this to exit code 1.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Work limit exceeded before the requested scale was reached. Exit code 2.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A condition the construction itself guarantees failed to hold. Exit code 3.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cgt
