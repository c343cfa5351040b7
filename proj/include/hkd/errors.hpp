#pragma once

#include <stdexcept>
#include <string>

namespace hkd {

// Input rejected: malformed data, broken preconditions, inconsistent config.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured degree / iteration budget ran out before the computation finished.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that valid inputs cannot break was broken anyway.
class InvariantViolation : public std::runtime_error {
public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hkd
